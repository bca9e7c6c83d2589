// Self-describing code artifact: versioned structured text carrying the
// parameters, the whole field chain, every provenance polynomial and the
// matrix, all field elements in the canonical base-q decimal encoding.
// Rendering is canonical, so equal codes produce byte-identical files.
#ifndef MRLRC_ARTIFACT_HPP
#define MRLRC_ARTIFACT_HPP

#include <string>

#include "mrlrc/construct.hpp"
#include "mrlrc/verify.hpp"

namespace mrlrc {

inline constexpr const char* kArtifactFormat = "mr-lrc-code/1";

std::string content_digest(const MrLrcCode& code);

std::string render_artifact(const MrLrcCode& code);
MrLrcCode parse_artifact(const std::string& text, bool check_digest = true);

std::string render_report(const VerifyReport& rep, const std::string& verdict);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace mrlrc

#endif

#include "mrlrc/artifact.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace mrlrc {

using json = nlohmann::ordered_json;

namespace {

std::string base_modulus_text(const Fq& k) {
    Poly m;
    m.c = k.modulus();
    return poly::to_text(m);
}

json matrix_json(const MrLrcCode& code) {
    const ExtField& F = *code.ext;
    json entries = json::array();
    for (int i = 0; i < code.mat.rows; ++i)
        for (int j = 0; j < code.mat.cols; ++j) entries.push_back(F.to_decimal(code.mat.get(i, j)));
    return json{{"rows", code.mat.rows}, {"cols", code.mat.cols}, {"entries", entries}};
}

json inner_json(const MrLrcCode& code) {
    json entries = json::array();
    for (int i = 0; i < code.inner_mds.rows; ++i)
        for (int j = 0; j < code.inner_mds.cols; ++j) entries.push_back(code.inner_mds.at(i, j));
    return json{{"rows", code.inner_mds.rows}, {"cols", code.inner_mds.cols}, {"entries", entries}};
}

}  // namespace

std::string content_digest(const MrLrcCode& code) {
    Fnv1a d;
    d.feed(kArtifactFormat);
    const LrcParams& p = code.params;
    for (long long v : {(long long)p.n, (long long)p.r, (long long)p.g, (long long)p.h,
                        (long long)p.a, (long long)p.q, (long long)p.m})
        d.feed(std::to_string(v));
    d.feed(form_name(p.form));
    d.feed(base_modulus_text(*code.fq));
    d.feed(poly::to_text(code.Q));
    for (const auto& m : code.coprime.members) d.feed(poly::to_text(m));
    for (const auto& f : code.numerators) d.feed(poly::to_text(f));
    d.feed(code.family.route);
    for (auto v : code.inner_mds.e) d.feed(std::to_string(v));
    for (int i = 0; i < code.mat.rows; ++i)
        for (int j = 0; j < code.mat.cols; ++j) d.feed(code.ext->to_decimal(code.mat.get(i, j)));
    return d.hex();
}

std::string render_artifact(const MrLrcCode& code) {
    const LrcParams& p = code.params;
    json j;
    j["format"] = kArtifactFormat;
    j["params"] = {{"n", p.n}, {"r", p.r}, {"g", p.g}, {"h", p.h},
                   {"a", p.a}, {"k", p.k()}, {"q", p.q}, {"m", p.m}};
    j["route"] = route_name(p.route);
    j["form"] = form_name(p.form);
    std::uint64_t prime;
    unsigned t;
    factor_prime_power(p.q, prime, t);
    j["field"] = {{"p", prime},
                  {"t", t},
                  {"base_modulus", base_modulus_text(*code.fq)},
                  {"Q", poly::to_text(code.Q)},
                  {"deg_Q", code.ext->degree()}};
    json cop = json::array();
    for (const auto& m : code.coprime.members) cop.push_back(poly::to_text(m));
    j["coprime_family"] = cop;
    json nums = json::array();
    for (const auto& f : code.numerators) nums.push_back(poly::to_text(f));
    j["numerators"] = nums;
    j["family"] = {{"route", code.family.route},
                   {"strength", code.family.s},
                   {"rows_used", code.family.m_used}};
    j["inner_mds"] = inner_json(code);
    j["matrix"] = matrix_json(code);
    j["digest"] = content_digest(code);
    return j.dump(2) + "\n";
}

MrLrcCode parse_artifact(const std::string& text, bool check_digest) {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != kArtifactFormat)
        throw Error("unsupported artifact format");
    MrLrcCode code;
    LrcParams& p = code.params;
    const json& jp = j.at("params");
    p.n = jp.at("n").get<int>();
    p.r = jp.at("r").get<int>();
    p.g = jp.at("g").get<int>();
    p.h = jp.at("h").get<int>();
    p.a = jp.at("a").get<int>();
    p.q = jp.at("q").get<std::uint32_t>();
    p.m = jp.at("m").get<unsigned>();
    p.route = route_from_name(j.at("route").get<std::string>());
    p.form = form_from_name(j.at("form").get<std::string>());

    const json& jf = j.at("field");
    Poly base_mod = poly::from_text(jf.at("base_modulus").get<std::string>());
    code.fq = std::make_shared<Fq>(jf.at("p").get<std::uint32_t>(), jf.at("t").get<unsigned>(),
                                   base_mod.c);
    code.Q = poly::from_text(jf.at("Q").get<std::string>());
    code.ext = ext_make(code.fq, code.Q);
    if (code.ext->degree() != jf.at("deg_Q").get<unsigned>())
        throw Error("artifact deg_Q does not match Q");

    code.coprime.ctx = code.fq;
    code.coprime.m = p.m;
    for (const auto& s : j.at("coprime_family"))
        code.coprime.members.push_back(poly::from_text(s.get<std::string>()));
    for (const auto& s : j.at("numerators"))
        code.numerators.push_back(poly::from_text(s.get<std::string>()));

    const json& jfam = j.at("family");
    code.family.ctx = code.fq;
    code.family.m = static_cast<int>(p.m);
    code.family.r = p.r;
    code.family.s = jfam.at("strength").get<int>();
    code.family.m_used = jfam.at("rows_used").get<int>();
    code.family.route = jfam.at("route").get<std::string>();
    code.family.cols = MatrixFq(code.fq, static_cast<int>(p.m), p.r);
    if (static_cast<int>(code.numerators.size()) != p.r)
        throw Error("artifact numerator count != r");
    for (int jcol = 0; jcol < p.r; ++jcol)
        for (std::size_t i = 0; i < code.numerators[jcol].c.size(); ++i)
            code.family.cols.at(static_cast<int>(i), jcol) = code.numerators[jcol].c[i];

    const json& jm = j.at("inner_mds");
    code.inner_mds = MatrixFq(code.fq, jm.at("rows").get<int>(), jm.at("cols").get<int>());
    std::size_t idx = 0;
    for (const auto& v : jm.at("entries")) code.inner_mds.e.at(idx++) = v.get<std::uint32_t>();

    const json& jh = j.at("matrix");
    code.mat = ExtMatrix(code.ext, jh.at("rows").get<int>(), jh.at("cols").get<int>());
    const json& entries = jh.at("entries");
    if (entries.size() != static_cast<std::size_t>(code.mat.rows) * code.mat.cols)
        throw Error("artifact matrix entry count mismatch");
    idx = 0;
    for (int i = 0; i < code.mat.rows; ++i)
        for (int jcol = 0; jcol < code.mat.cols; ++jcol)
            code.mat.set(i, jcol, code.ext->from_decimal(entries[idx++].get<std::string>()));

    if (check_digest && j.at("digest").get<std::string>() != content_digest(code))
        throw Error("artifact digest mismatch (use --force to skip the check)");
    return code;
}

std::string render_report(const VerifyReport& rep, const std::string& verdict) {
    json j;
    j["format"] = "mr-lrc-report/1";
    j["mode"] = rep.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled";
    if (rep.mode == VerifyMode::Sampled) j["seed"] = rep.seed;
    j["patterns_checked"] = rep.patterns_checked;
    j["failures"] = rep.failure_count;
    json w = json::array();
    for (const auto& pat : rep.witnesses) {
        std::ostringstream os;
        os << pat;
        w.push_back(os.str());
    }
    j["witnesses"] = w;
    j["elapsed_s"] = rep.elapsed_s;
    j["verdict"] = verdict;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mrlrc

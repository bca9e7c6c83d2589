// Command-line front end: construct | verify | encode | decode | bounds |
// selftest. Exit codes: 0 success (verify: MR pass), 1 MR failure,
// 2 enumeration cap exceeded, 3 domain or I/O error, 64 bad usage.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "mrlrc/artifact.hpp"
#include "mrlrc/bounds.hpp"
#include "mrlrc/selftest.hpp"

using namespace mrlrc;

namespace {

std::uint64_t env_cap() {
    if (const char* e = std::getenv("MRLRC_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed MRLRC_ENUM_CAP\n";
    }
    return kDefaultEnumCap;
}

std::vector<ExtElem> parse_elems(const ExtField& F, const std::string& csv,
                                 std::vector<bool>* erased) {
    std::vector<ExtElem> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "?") {
            if (!erased) throw Error("erasure mark not allowed here");
            erased->push_back(true);
            out.push_back(F.zero());
        } else {
            if (erased) erased->push_back(false);
            out.push_back(F.from_decimal(item));
        }
    }
    return out;
}

std::string join_elems(const ExtField& F, const std::vector<ExtElem>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += F.to_decimal(v[i]);
    }
    return s;
}

void print_field_size(const MrLrcCode& code) {
    std::cout << "field size ell = " << code.params.q << "^" << code.ext->degree()
              << "  (log2 ell = " << code.log2_field_size() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximally recoverable local reconstruction codes over explicit fields"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // ---- construct ----
    auto* c = app.add_subcommand("construct", "build a code and write its artifact");
    c->set_help_flag("--help");
    int cn = 0, cr = 0, ch = 0, ca = 0;
    std::string croute = "auto", cform = "parity", cout_path = "code.json";
    std::optional<std::uint32_t> cq;
    std::optional<unsigned> cm;
    c->add_option("-n", cn, "code length")->required();
    c->add_option("-r", cr, "group size (locality)")->required();
    c->add_option("-h", ch, "heavy parities")->required();
    c->add_option("-a", ca, "local parities per group")->required();
    c->add_option("--route", croute, "manual|auto|T3.3|T3.5|T3.9|T3.10|T3.12|T3.13");
    c->add_option("--form", cform, "parity|generator (manual/auto routes only)");
    c->add_option("--q", cq, "base field size (manual route)");
    c->add_option("--m", cm, "coprime polynomial degree (manual route)");
    c->add_option("-o,--out", cout_path, "artifact output path");

    // ---- verify ----
    auto* v = app.add_subcommand("verify", "check the MR property of an artifact");
    v->set_help_flag("--help");
    std::string vin, vmode = "exhaustive", vout;
    std::uint64_t vcap = env_cap(), vseed = 1, vsamples = 1000;
    int vjobs = 0;
    bool vforce = false, vserial = false;
    v->add_option("in", vin, "artifact path")->required();
    v->add_option("--mode", vmode, "exhaustive|sampled");
    v->add_option("--cap", vcap, "pattern enumeration cap");
    v->add_option("--seed", vseed, "sampled-mode seed");
    v->add_option("--samples", vsamples, "sampled-mode pattern count");
    v->add_option("--jobs", vjobs, "worker threads (0 = all)");
    v->add_flag("--force", vforce, "skip the artifact digest check");
    v->add_flag("--serial", vserial, "use the serial reference checker");
    v->add_option("--out", vout, "write a structured report here");

    // ---- encode ----
    auto* e = app.add_subcommand("encode", "encode a message with a parity-form artifact");
    e->set_help_flag("--help");
    std::string ein, emsg;
    e->add_option("in", ein, "artifact path")->required();
    e->add_option("--message", emsg, "k comma-separated canonical values")->required();

    // ---- decode ----
    auto* dd = app.add_subcommand("decode", "recover erased coordinates of a codeword");
    dd->set_help_flag("--help");
    std::string din, dword, derase;
    dd->add_option("in", din, "artifact path")->required();
    dd->add_option("--word", dword, "n comma-separated values; '?' marks an erasure")->required();
    dd->add_option("--erase", derase, "extra erasures as group:index pairs, comma separated");

    // ---- bounds ----
    auto* b = app.add_subcommand("bounds", "field-size bound table for given parameters");
    b->set_help_flag("--help");
    int bn = 0, br = 0, bh = 0, ba = 0;
    bool bcsv = false, bclaims = false;
    BoundOptions bopts;
    b->add_option("-n", bn, "code length")->required();
    b->add_option("-r", br, "group size")->required();
    b->add_option("-h", bh, "heavy parities")->required();
    b->add_option("-a", ba, "local parities")->required();
    b->add_flag("--csv", bcsv, "emit CSV");
    b->add_flag("--claims", bclaims, "also run the comparison-claim checks");
    b->add_option("--eps", bopts.eps, "epsilon for the curve-based rows");
    b->add_option("--const", bopts.constant, "big-O constant for asymptotic rows");

    // ---- selftest ----
    auto* st = app.add_subcommand("selftest", "run the full acceptance suite");
    st->set_help_flag("--help");
    SelftestOptions sopts;
    sopts.pattern_cap = env_cap();
    st->add_option("--jobs", sopts.jobs, "worker threads (0 = all)");
    st->add_option("--cap", sopts.pattern_cap, "pattern enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*c) {
            Route route = route_from_name(croute);
            LrcParams params = plan(cn, cr, ch, ca, route, form_from_name(cform), cq, cm);
            MrLrcCode code = build(params);
            write_file(cout_path, render_artifact(code));
            std::cout << "wrote " << cout_path << "\n";
            print_field_size(code);
            return 0;
        }
        if (*v) {
            MrLrcCode code = parse_artifact(read_file(vin), !vforce);
            VerifyOptions opts;
            opts.mode = vmode == "sampled" ? VerifyMode::Sampled : VerifyMode::Exhaustive;
            opts.cap = vcap;
            opts.seed = vseed;
            opts.samples = vsamples;
            opts.jobs = vjobs;
            VerifyReport rep;
            if (code.params.form == CodeForm::Parity)
                rep = vserial ? check_mr_parity_serial(code, opts) : check_mr_parity(code, opts);
            else
                rep = vserial ? check_mr_generator_serial(code, opts)
                              : check_mr_generator(code, opts);
            std::string verdict = rep.pass() ? "pass" : "fail";
            std::cout << "checked " << rep.patterns_checked << " patterns in " << rep.elapsed_s
                      << "s: " << verdict << "\n";
            for (const auto& w : rep.witnesses) std::cout << "witness " << w << "\n";
            if (!vout.empty()) write_file(vout, render_report(rep, verdict));
            return rep.pass() ? 0 : 1;
        }
        if (*e) {
            MrLrcCode code = parse_artifact(read_file(ein));
            std::vector<ExtElem> msg = parse_elems(*code.ext, emsg, nullptr);
            std::cout << join_elems(*code.ext, encode(code, msg)) << "\n";
            return 0;
        }
        if (*dd) {
            MrLrcCode code = parse_artifact(read_file(din));
            std::vector<bool> erased;
            std::vector<ExtElem> word = parse_elems(*code.ext, dword, &erased);
            if (static_cast<int>(word.size()) != code.params.n)
                throw Error("word must have n values");
            if (!derase.empty()) {
                std::stringstream ss(derase);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos) throw Error("erasures are group:index pairs");
                    int grp = std::stoi(item.substr(0, colon));
                    int idx = std::stoi(item.substr(colon + 1));
                    if (grp < 0 || grp >= code.params.g || idx < 0 || idx >= code.params.r)
                        throw Error("erasure position out of range");
                    erased[grp * code.params.r + idx] = true;
                }
            }
            std::cout << join_elems(*code.ext, decode_erasures(code, word, erased)) << "\n";
            return 0;
        }
        if (*b) {
            std::cout << render_bound_table(bound_table(bn, br, bh, ba, bopts), bcsv);
            if (bclaims) {
                ComparisonReport rep = check_comparison_claims(bopts);
                std::cout << render_comparison_report(rep);
                return rep.all_ok() ? 0 : 1;
            }
            return 0;
        }
        if (*st) return run_acceptance(std::cout, sopts) == 0 ? 0 : 1;
    } catch (const CapExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 64;
}

// Times the serial reference checker against the OpenMP kernel on a pair
// of mid-size instances and confirms both produce identical reports.
#include <omp.h>

#include <cstdio>

#include "mrlrc/verify.hpp"

using namespace mrlrc;

namespace {

void bench(const char* name, const MrLrcCode& code, const VerifyOptions& opts) {
    VerifyReport serial = code.params.form == CodeForm::Parity
                              ? check_mr_parity_serial(code, opts)
                              : check_mr_generator_serial(code, opts);
    VerifyReport parallel = code.params.form == CodeForm::Parity ? check_mr_parity(code, opts)
                                                                 : check_mr_generator(code, opts);
    bool same = serial.patterns_checked == parallel.patterns_checked &&
                serial.failure_count == parallel.failure_count &&
                serial.witnesses == parallel.witnesses;
    std::printf("%-28s %9llu patterns  serial %7.3fs  parallel(%d) %7.3fs  speedup %.2fx  %s\n",
                name, static_cast<unsigned long long>(serial.patterns_checked),
                serial.elapsed_s, omp_get_max_threads(), parallel.elapsed_s,
                serial.elapsed_s / parallel.elapsed_s, same ? "reports match" : "REPORTS DIFFER");
}

}  // namespace

int main() {
    std::printf("MR verification: serial reference vs OpenMP kernel\n\n");

    {
        MrLrcCode code = build_parity(plan(16, 4, 2, 1, Route::Auto, CodeForm::Parity));
        VerifyOptions opts;
        opts.cap = 1u << 20;
        bench("parity (16,4,2,1) exhaustive", code, opts);
    }
    {
        MrLrcCode code = build_parity(plan(24, 4, 3, 1, Route::Auto, CodeForm::Parity));
        VerifyOptions opts;
        opts.mode = VerifyMode::Sampled;
        opts.samples = 20000;
        opts.seed = 7;
        bench("parity (24,4,3,1) sampled", code, opts);
    }
    {
        MrLrcCode code = build_generator(plan(16, 4, 1, 1, Route::T33, CodeForm::Generator));
        VerifyOptions opts;
        opts.cap = 1u << 20;
        bench("generator (16,4,1,1) exhaustive", code, opts);
    }
    return 0;
}

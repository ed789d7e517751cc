#include <chrono>
#include <iostream>
#include <string>

#include "psalg/suite.hpp"

// Times the verification suite serial vs parallel and checks that both
// executions render the same report apart from the execution label.

namespace {

double run_once(psalg::SuiteMode mode, bool parallel, std::string& rendered) {
    const auto start = std::chrono::steady_clock::now();
    psalg::SuiteReport rep = psalg::run_classification_suite(mode, parallel);
    const auto stop = std::chrono::steady_clock::now();
    rep.parallel = false;  // normalize the execution label for the comparison
    rendered = psalg::render_text(rep);
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    psalg::SuiteMode mode = psalg::SuiteMode::Quick;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--full") {
            mode = psalg::SuiteMode::Full;
        } else if (arg == "--quick") {
            mode = psalg::SuiteMode::Quick;
        } else {
            std::cerr << "usage: bench_suite [--quick|--full]\n";
            return 2;
        }
    }

    std::string serial_report, parallel_report;
    const double serial = run_once(mode, false, serial_report);
    const double parallel = run_once(mode, true, parallel_report);

    std::cout << "suite: " << (mode == psalg::SuiteMode::Full ? "full" : "quick") << "\n";
    std::cout << "serial:   " << serial << " s\n";
    std::cout << "parallel: " << parallel << " s\n";
    std::cout << "speedup:  " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";

    if (serial_report != parallel_report) {
        std::cout << "reports differ between serial and parallel runs\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return 0;
}

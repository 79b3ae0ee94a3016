// reads a report JSON file and checks it against the scattered-lab/v1
// structural constraints; exit 0 when valid

#include <fstream>
#include <iostream>

#include "scatlab/report.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: report_validator <report.json>\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    scatlab::json rep = scatlab::json::parse(in, nullptr, false);
    if (rep.is_discarded()) {
        std::cerr << "not valid JSON\n";
        return 1;
    }
    auto errs = scatlab::validate_report(rep);
    for (auto& e : errs) std::cerr << e << "\n";
    return errs.empty() ? 0 : 1;
}

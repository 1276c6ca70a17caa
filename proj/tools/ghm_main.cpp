#include <fstream>
#include <iostream>
#include <vector>

#include "ghm/report.hpp"

int main(int argc, char** argv) {
    using namespace ghm;
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        RunConfig cfg = parse_args(args);
        GramReport rep = run(cfg);
        std::string text = emit_report(rep, cfg.format);
        if (cfg.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) {
                std::cerr << "ghm: cannot open output file " << cfg.output << "\n";
                return 2;
            }
            out << text;
        }
        for (const auto& e : rep.errors) std::cerr << "ghm: error: " << e << "\n";
        return exit_code_for(rep);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "ghm: " << e.what() << "\n";
        return 2;
    }
}

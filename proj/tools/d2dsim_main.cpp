#include <exception>
#include <iostream>

#include "d2dsim/cli_config.hpp"
#include "d2dsim/report.hpp"
#include "d2dsim/simulation.hpp"

int main(int argc, char** argv) {
    try {
        const d2dsim::CliOptions options = d2dsim::parse_config(argc, argv);
        const d2dsim::SimOutput output = d2dsim::run(options.config);
        d2dsim::emit_reports(output, options.out_dir, std::cout);
        std::cout << "wrote shards.csv, sinr.csv, run.json to " << options.out_dir.string()
                  << "\n";
        return 0;
    } catch (const d2dsim::HelpRequested& help) {
        std::cout << help.text();
        return 0;
    } catch (const d2dsim::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// Runs the three algorithms once on the 4x4 path graph (shortest path) and on
// K6 (maximum-weight perfect matching).
#include <iostream>

#include "csale/algorithms.hpp"
#include "csale/analysis.hpp"
#include "csale/bench/instances.hpp"

int main() {
    using namespace csale;

    const bench::Problem problems[] = {
        {"synthetic_path", PathClass(bench::synthetic_path_graph()), bench::ternary_weights(16, 7),
         Sense::Minimize},
        {"k_full:6", MatchingClass(bench::complete_graph(6)), bench::ternary_weights(15, 7)},
    };
    const CsaleConfig cfg{.epsilon = 0.5, .delta = 0.05};

    for (const auto& p : problems) {
        std::visit(
            [&](const auto& dc) {
                const auto best = dc.oracle(canonicalize(p.model()).means(), ArmSet{}, ArmSet{});
                std::cout << p.id << ": optimum " << *best << " value " << set_reward(p.means, *best) << '\n';
                for (Algorithm alg : {Algorithm::Csale, Algorithm::Naive, Algorithm::ClucbPac}) {
                    const RunReport rep = run_algorithm(alg, dc, p.model(), cfg, 2024);
                    std::cout << "  " << to_string(alg) << ": " << rep.output << " value "
                              << set_reward(p.means, rep.output) << ", " << rep.total_samples
                              << " samples, " << rep.oracle_calls << " oracle calls\n";
                }
            },
            p.decision_class);
    }
}

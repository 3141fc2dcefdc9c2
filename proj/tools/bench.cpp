// Benchmark: OpenMP kernels against their serial reference implementations.
// Checks agreement of the results while timing both paths.

#include "ordlab/fixtures.hpp"
#include "ordlab/realization.hpp"
#include "ordlab/search.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ordlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int ball = argc > 1 ? std::atoi(argv[1]) : 6;
    int n = argc > 2 ? std::atoi(argv[2]) : 12;

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not available (both kernels run serially)\n";
#endif

    // Kernel 1: fixed-point survey over a realized ball.
    auto st = assign_coordinates(enumerate_ball({ball}));
    std::cout << "survey: ball " << ball << " = " << st.elements.size() << " elements\n";

    auto t0 = Clock::now();
    SurveyReport serial = fixed_point_survey_serial(st);
    double t_serial = seconds_since(t0);

    t0 = Clock::now();
    SurveyReport parallel = fixed_point_survey(st);
    double t_parallel = seconds_since(t0);

    bool survey_match = serial.isolated_counts == parallel.isolated_counts &&
                        serial.max_isolated == parallel.max_isolated;
    std::cout << "  serial   " << t_serial << " s\n"
              << "  openmp   " << t_parallel << " s\n"
              << "  results  " << (survey_match ? "identical" : "MISMATCH") << "\n";

    // Kernel 2: grid evaluation of the restricted word set.
    auto words = enumerate_Sn_prime(n);
    std::vector<Rat> grid{make_rat(1, 4), make_rat(1, 2), make_rat(3, 4)};
    PLHomeo alpha = fixtures::search_alpha(), beta = fixtures::search_beta();
    std::cout << "grid: n " << n << " = " << words.size() << " words\n";

    t0 = Clock::now();
    auto vs = grid_values(words, alpha, beta, PLHomeo::identity(), grid, false);
    double g_serial = seconds_since(t0);

    t0 = Clock::now();
    auto vp = grid_values(words, alpha, beta, PLHomeo::identity(), grid, true);
    double g_parallel = seconds_since(t0);

    bool grid_match = vs == vp;
    std::cout << "  serial   " << g_serial << " s\n"
              << "  openmp   " << g_parallel << " s\n"
              << "  results  " << (grid_match ? "identical" : "MISMATCH") << "\n";

    return (survey_match && grid_match) ? 0 : 1;
}

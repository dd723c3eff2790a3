// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "eigencount/corpus.hpp"
#include "reference/suites.hpp"

using namespace eigencount;
using ref::Check;

namespace {

struct Criterion
{
    int id;
    std::string title;
    std::function<std::vector<Check>()> checks;
};

// Corpus shape required by the soundness sweep.
Check corpus_shape()
{
    Check c{"corpus_shape"};
    const auto corpus = regression_corpus();
    std::set<NormKind> norms;
    std::set<int> ranks;
    int lo = 1 << 30, hi = 0;
    for (const auto& e : corpus) {
        norms.insert(e.model.norm);
        ranks.insert(numerical_rank(singular_values(materialize(e.model).k), 1e-10));
        lo = std::min(lo, e.model.dim);
        hi = std::max(hi, e.model.dim);
    }
    c.expect(corpus.size() >= 30, [&] { return nlohmann::json{{"models", corpus.size()}}; });
    c.expect(lo >= 8 && hi <= 64, [&] { return nlohmann::json{{"min_dim", lo}, {"max_dim", hi}}; });
    c.expect(norms.size() == 3, [&] { return nlohmann::json{{"norms", norms.size()}}; });
    c.expect(ranks == std::set<int>{1, 2, 3, 4}, [&] { return nlohmann::json{{"ranks", ranks}}; });
    c.summary = std::to_string(corpus.size()) + " models, dims " + std::to_string(lo) + "-" + std::to_string(hi);
    return c;
}

Check timed_soundness()
{
    double seconds = 0.0;
    Check c = ref::check_soundness(&seconds);
    c.expect(seconds < 120.0, [&] { return nlohmann::json{{"seconds", seconds}}; });
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s", seconds);
    c.summary += buf;
    return c;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "soundness sweep", [] { return std::vector<Check>{corpus_shape(), timed_soundness()}; }},
        {2, "compact-case recovery",
         [] { return std::vector<Check>{ref::check_compact_recovery(), ref::check_koenig_random(2, 100)}; }},
        {3, "Koenig inequality", [] { return std::vector<Check>{ref::check_koenig_trials(3, 300)}; }},
        {4, "determinant identity",
         [] { return std::vector<Check>{ref::check_shift_determinant(4), ref::check_shift_zero()}; }},
        {5, "determinant bound", [] { return std::vector<Check>{ref::check_det_bound()}; }},
        {6, "special functions",
         [] {
             return std::vector<Check>{ref::check_lambert_residual(), ref::check_phi_vs_maximization(),
                                       ref::check_phi_dominance()};
         }},
        {7, "moment identity", [] { return std::vector<Check>{ref::check_moment_identity()}; }},
        {8, "asymptotic exponent", [] { return std::vector<Check>{ref::check_slope()}; }},
        {9, "Gamma_p envelope dominance", [] { return std::vector<Check>{ref::check_gamma_envelope(9, 1000)}; }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        std::string detail;
        try {
            for (const auto& check : c.checks()) {
                ok = ok && check.ok();
                if (!detail.empty()) detail += "; ";
                detail += check.name + ": " + std::to_string(check.run - check.failed) + "/" +
                          std::to_string(check.run);
                if (!check.summary.empty()) detail += " (" + check.summary + ")";
                if (check.counterexample) detail += " counterexample " + check.counterexample->dump();
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.title << ": " << detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}

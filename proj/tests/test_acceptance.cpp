// Acceptance gate: eleven checks covering the full pipeline, one line of
// output per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hcenter/characters.hpp"
#include "hcenter/diagrams.hpp"
#include "hcenter/expr.hpp"
#include "hcenter/measures.hpp"
#include "hcenter/shifted.hpp"

using namespace hcenter;

namespace {

int g_failures = 0;

// Runs one criterion, timing it; limit_s <= 0 means no limit beyond the
// harness timeout. The body returns an empty string on success or a short
// failure description.
void criterion(int number, const std::string& label, double limit_s,
               const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = body();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && limit_s > 0 && secs > limit_s) {
        std::ostringstream s;
        s << "exceeded the " << limit_s << "s limit";
        failure = s.str();
    }
    char line[256];
    if (failure.empty()) {
        std::snprintf(line, sizeof line, "PASS criterion-%d %s (%.2fs)", number,
                      label.c_str(), secs);
    } else {
        std::snprintf(line, sizeof line, "FAIL criterion-%d %s: %s", number,
                      label.c_str(), failure.c_str());
        ++g_failures;
    }
    std::cout << line << "\n" << std::flush;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HCENTER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r;
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

ShiftedSymFn p_sharp_k(int k) { return ShiftedSymFn::p_shift(Partition({k})); }

std::string check_stable_product() {
    RunResult r = run_cli("shifted multiply \"p#[2]\" \"p#[2]\"");
    const std::string want = "p#[2,2] + 4 p#[3] + 2 p#[1,1]";
    if (r.code != 0) return "CLI exited " + std::to_string(r.code);
    if (r.out != want + "\n") return "CLI printed \"" + r.out + "\"";
    DiagramWord two = make_alpha(Partition({2}));
    if (render_pshift(phi(tensor(two, two))) != want)
        return "phi of the doubled diagram disagrees";
    return "";
}

std::string check_alpha_characters() {
    for (int m = 0; m <= 4; ++m)
        for (const Partition& mu : partitions_of(m)) {
            const ShiftedSymFn f = phi(make_alpha(mu));
            for (int n = 0; n <= 6; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    Rational want = 0;
                    if (m <= n)
                        want = falling_factorial(Rational(n), m) *
                               rat(character(lam, embed(mu, n))) /
                               Rational(dim_irrep(lam));
                    if (eval(f, lam) != want)
                        return "phi(alpha_" + to_string(mu) + ") at " + to_string(lam);
                }
        }
    return "";
}

std::string check_moment_pipelines() {
    for (int k = 0; k <= 4; ++k) {
        const ShiftedSymFn ccw = phi(make_c_tilde(k));
        const ShiftedSymFn cw = phi(make_c(k));
        for (int n = 0; n <= 6; ++n) {
            // Pipeline 2: Jucys-Murphy expansions in the class algebra.
            const auto jm_ccw = jm_projected_power(k, n).eigenvalues();
            const auto jm_cw = n >= 1 ? jm_conjugated_sum(k, n).eigenvalues()
                                      : nullptr;
            for (const Partition& lam : partitions_of(n)) {
                // Pipeline 1: diagram sweep and interpolation.
                const Rational sweep_ccw = eval(ccw, lam);
                const Rational sweep_cw = eval(cw, lam);
                if (sweep_ccw != jm_ccw->at(lam))
                    return "ccw sweep vs JM at k=" + std::to_string(k) + ", " +
                           to_string(lam);
                if (jm_cw) {
                    if (sweep_cw != jm_cw->at(lam))
                        return "cw sweep vs JM at k=" + std::to_string(k) + ", " +
                               to_string(lam);
                } else if (sweep_cw != 0) {
                    return "cw circle must vanish on the empty partition";
                }
                // Pipeline 3: hook-formula measures.
                if (sweep_ccw != moments(transition_measure(lam), k)[k])
                    return "transition moment at k=" + std::to_string(k) + ", " +
                           to_string(lam);
                if (n >= 1) {
                    const Rational want =
                        Rational(n) * moments(cotransition_measure(lam), k)[k];
                    if (sweep_cw != want)
                        return "cotransition moment at k=" + std::to_string(k) + ", " +
                               to_string(lam);
                }
            }
        }
    }
    return "";
}

std::string check_idempotent_closure() {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const CentralElement x = young_idempotent_closure_vector(lam);
            if (closure_of_central(x) != s_star_to_p(lam))
                return "closure at " + to_string(lam);
        }
    return "";
}

std::string check_curl_recursion() {
    for (int k = 0; k <= 4; ++k) {
        ShiftedSymFn rhs = ShiftedSymFn::zero();
        for (int i = 0; i + 1 <= k; ++i)
            rhs = rhs + multiply(phi(make_c_tilde(i)), phi(make_c(k - 1 - i)));
        if (phi(make_c_tilde(k + 1)) != rhs)
            return "phi recursion at k=" + std::to_string(k);
    }
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const MomentData d = moment_data(lam, 12);
            for (int k = 0; k + 1 <= 12; ++k) {
                Rational sum = 0;
                for (int i = 0; i + 1 <= k; ++i) sum += d.m[i] * d.B[k + 1 - i];
                if (d.m[k + 1] != sum)
                    return "moment recursion at " + to_string(lam) +
                           ", order " + std::to_string(k + 1);
            }
        }
    return "";
}

std::string check_local_relations() {
    RunResult r = run_cli("verify --suite local-relations");
    if (r.code != 0) return "suite exited " + std::to_string(r.code);
    if (r.out.find("FAIL") != std::string::npos) return "suite reported failures";
    return "";
}

std::string check_characterization() {
    for (int m = 0; m <= 6; ++m)
        for (const Partition& mu : partitions_of(m)) {
            const ShiftedSymFn s = s_star_to_p(mu);
            const Rational h = Rational(hook_product(mu));
            for (int n = 0; n <= m; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    const Rational want = (lam == mu) ? h : Rational(0);
                    if (eval(s, lam) != want)
                        return "character route at s*_" + to_string(mu) + ", " +
                               to_string(lam);
                    std::vector<Rational> x;
                    for (int part : lam.parts()) x.emplace_back(part);
                    while (static_cast<int>(x.size()) < mu.length()) x.emplace_back(0);
                    if (s_star_det_eval(mu, x) != want)
                        return "determinant route at s*_" + to_string(mu) + ", " +
                               to_string(lam);
                }
        }
    for (int m = 0; m <= 5; ++m)
        for (const Partition& mu : partitions_of(m)) {
            const ShiftedSymFn s = s_star_to_p(mu);
            for (int n = 0; n <= 5; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    std::vector<Rational> x;
                    for (int part : lam.parts()) x.emplace_back(part);
                    while (static_cast<int>(x.size()) < mu.length()) x.emplace_back(0);
                    if (s_star_det_eval(mu, x) != eval(s, lam))
                        return "route disagreement at s*_" + to_string(mu) + ", " +
                               to_string(lam);
                }
        }
    return "";
}

std::string check_measures() {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lam : partitions_of(n)) {
            Rational mass = 0;
            for (const auto& [x, w] : transition_measure(lam).atoms) mass += w;
            if (mass != 1) return "transition mass at " + to_string(lam);
            if (n > 0) {
                mass = 0;
                for (const auto& [x, w] : cotransition_measure(lam).atoms) mass += w;
                if (mass != 1) return "cotransition mass at " + to_string(lam);
            }
            const InterlacingPair seq = interlacing_sequences(lam);
            long long center = 0;
            for (int x : seq.xs) center += x;
            for (int y : seq.ys) center -= y;
            if (center != 0) return "interlacing center at " + to_string(lam);
        }
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const auto m = moments(transition_measure(lam), 2);
            if (m[1] != 0 || m[2] != n) return "low moments at " + to_string(lam);
        }
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const MomentData d = moment_data(lam, 8);
            const auto mt = moments(cotransition_measure(lam), 6);
            for (int k = 0; k <= 6; ++k)
                if (d.B[k + 2] != Rational(n) * mt[k])
                    return "Boolean bridge at " + to_string(lam) + ", k=" +
                           std::to_string(k);
        }
    return "";
}

std::string check_involutions() {
    std::vector<ScaledDiagram> words;
    for (int k = 0; k <= 3; ++k) {
        words.push_back({make_c(k), 1});
        words.push_back({make_c_tilde(k), 1});
    }
    for (int m = 0; m <= 3; ++m)
        for (const Partition& mu : partitions_of(m)) words.push_back({make_alpha(mu), 1});
    for (const ScaledDiagram& d : words)
        if (omega_bar(phi(d)) != phi(involution_I(d)))
            return "omega_bar vs I on a word with " + std::to_string(d.word.dots) +
                   " dots, " + std::to_string(d.word.crossings) + " crossings";
    for (int k = 0; k <= 5; ++k)
        if (omega_bar(e_star(k)) != h_star(k))
            return "omega_bar(e*_" + std::to_string(k) + ")";
    return "";
}

std::string check_degree_drop() {
    for (int k = 2; k <= 5; ++k) {
        const ShiftedSymFn diff = phi(make_alpha(Partition({k}))) - phi(make_c(k - 1));
        // The zero difference (it happens at k = 2) is inside every bound.
        if (!diff.is_zero() && diff.degree() > k - 1)
            return "degree " + std::to_string(diff.degree()) + " at k=" +
                   std::to_string(k);
    }
    return "";
}

std::string check_products() {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n))
            for (const Partition& nu : partitions_of(n)) {
                CentralElement a(n), b(n);
                a.add_coeff(mu, 1);
                b.add_coeff(nu, 1);
                const GroupAlgebraElement conv =
                    to_group_algebra(a) * to_group_algebra(b);
                if (central_multiply(a, b) != from_group_algebra(conv))
                    return "convolution at n=" + std::to_string(n) + ", " +
                           to_string(mu) + " * " + to_string(nu);
            }

    // Random degree <= 3 pairs: the product in Lambda* must match central
    // multiplication of the A_{mu,n} images at n = deg f + deg g.
    std::mt19937 rng(20240101);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::vector<Partition> pool = partitions_up_to(3);
    auto random_fn = [&] {
        ShiftedSymFn f = ShiftedSymFn::zero();
        while (f.is_zero())
            for (const Partition& mu : pool) f.add_term(mu, coef(rng));
        return f;
    };
    auto image = [](const ShiftedSymFn& f, int n) {
        CentralElement x = CentralElement::zero(n);
        for (const auto& [mu, c] : f.coeffs())
            x = x + normalized_class_sum(mu, n).scaled(c);
        return x;
    };
    for (int trial = 0; trial < 6; ++trial) {
        const ShiftedSymFn f = random_fn();
        const ShiftedSymFn g = random_fn();
        const int n = f.degree() + g.degree();
        const CentralElement want = central_multiply(image(f, n), image(g, n));
        if (image(multiply(f, g), n) != want)
            return "Lambda* product vs class algebra on trial " +
                   std::to_string(trial);
    }
    return "";
}

}  // namespace

int main() {
    criterion(1, "stable-product", 5.0, check_stable_product);
    criterion(2, "alpha-characters", 60.0, check_alpha_characters);
    criterion(3, "moment-pipelines", 0, check_moment_pipelines);
    criterion(4, "idempotent-closure", 0, check_idempotent_closure);
    criterion(5, "curl-recursion", 0, check_curl_recursion);
    criterion(6, "local-relations", 120.0, check_local_relations);
    criterion(7, "vanishing-characterization", 0, check_characterization);
    criterion(8, "kerov-measures", 0, check_measures);
    criterion(9, "involutions", 0, check_involutions);
    criterion(10, "degree-drop", 0, check_degree_drop);
    criterion(11, "product-transport", 0, check_products);
    if (g_failures) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}

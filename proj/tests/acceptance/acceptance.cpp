#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "markovrank/markovrank.hpp"

#if MARKOVRANK_HAVE_CLI
#include "cli.hpp"
#endif

using namespace mrank;

namespace {

using Vec = std::vector<double>;

// Collects failure notes for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) notes_.push_back(what);
    }

    void close(const Vec& got, const Vec& want, double tol, const std::string& what) {
        expect(got.size() == want.size() && max_abs_diff(got, want) <= tol, what);
    }

    template <class F>
    void no_throw(F&& f, const std::string& what) {
        try {
            f();
        } catch (const std::exception& e) {
            notes_.push_back(what + ": " + e.what());
        }
    }

    template <class F>
    bool raises_multiplicity(F&& f) {
        try {
            f();
        } catch (const MultiplicityError&) {
            return true;
        } catch (const std::exception&) {
        }
        return false;
    }

    void info(const std::string& note) { info_.push_back(note); }

    const std::vector<std::string>& notes() const { return notes_; }
    const std::vector<std::string>& infos() const { return info_; }

private:
    std::vector<std::string> notes_;
    std::vector<std::string> info_;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<void(Check&)> body;
};

AdjacencyMatrix base(const AdjacencyMatrix& a) { return patch_zero_rows(a); }

bool regular(const AdjacencyMatrix& a) { return is_regular(transition_from_patched(base(a))).regular; }

Vec ranks(const ScoreVector& s) { return rank_statistic(s).ranks; }

#if MARKOVRANK_HAVE_CLI
int cli_exit(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

std::string data(const std::string& name) { return std::string(MARKOVRANK_TEST_DATA) + "/" + name; }
#endif

void stationary_oracle(Check& c) {
    const TransitionMatrix m(fixtures::three_state_chain());
    const Vec want{0.375, 0.5, 0.125};
    c.close(stationary_exact(m).values, want, 1e-9, "exact stationary vector");
    c.close(stationary_power(m).values, want, 2e-6, "power stationary vector at tol 1e-6");
}

void four_node_golden(Check& c) {
    const auto a = fixtures::four_node();
    const std::vector<std::pair<double, Vec>> pr{
        {0.85, {0.2199138, 0.4292090, 0.2199138, 0.1309634}},
        {0.9, {0.2205707, 0.4346017, 0.2205707, 0.1242568}},
        {0.999, {0.2222037, 0.4443518, 0.2222037, 0.1112408}},
        {1.0, {0.2222222, 0.4444444, 0.2222222, 0.1111111}}};
    const std::vector<std::pair<double, Vec>> mr{
        {0.0, {0.2222222, 0.4444444, 0.2222222, 0.1111111}},
        {0.1, {0.2220704, 0.4436754, 0.2220704, 0.1121837}},
        {1.0, {0.2209141, 0.4369806, 0.2209141, 0.1211911}}};
    for (const auto& [alpha, want] : pr)
        c.close(pagerank(a, alpha).values, want, 1e-6, "pagerank alpha=" + std::to_string(alpha));
    for (const auto& [eps, want] : mr)
        c.close(markovrank(a, eps).values, want, 1e-6, "markovrank eps=" + std::to_string(eps));
}

void example1_golden(Check& c) {
    const auto a = fixtures::example1();
    const Vec undamped{0.28846154, 0.27403846, 0.07692308, 0.14903846, 0.12500000, 0.08653846};
    const std::vector<std::pair<double, Vec>> pr{
        {0.85, {0.26186689, 0.26300737, 0.09549045, 0.15113717, 0.13454078, 0.09395734}},
        {0.9, {0.27051626, 0.26685259, 0.08952441, 0.15039057, 0.13150107, 0.09121509}},
        {1.0, undamped}};
    const std::vector<std::pair<double, Vec>> mr{
        {0.0, undamped},
        {1e-7, undamped},
        {1e-5, {0.28846148, 0.27403844, 0.07692312, 0.14903847, 0.12500002, 0.08653847}},
        {0.1, {0.28789019, 0.27382451, 0.07732932, 0.14907766, 0.12521127, 0.08666706}},
        {1.0, {0.28293661, 0.27193053, 0.08083711, 0.14942781, 0.12703084, 0.08783709}}};
    std::vector<ScoreVector> same_rank;
    for (const auto& [alpha, want] : pr) {
        const auto s = pagerank(a, alpha);
        c.close(s.values, want, 1e-6, "pagerank alpha=" + std::to_string(alpha));
        if (alpha != 0.85) same_rank.push_back(s);
    }
    for (const auto& [eps, want] : mr) {
        const auto s = markovrank(a, eps);
        c.close(s.values, want, 1e-6, "markovrank eps=" + std::to_string(eps));
        same_rank.push_back(s);
    }
    for (std::size_t i = 0; i < same_rank.size(); ++i)
        for (std::size_t j = i + 1; j < same_rank.size(); ++j)
            c.expect(is_identical_rank(same_rank[i], same_rank[j]), "rank statistics differ");
}

void example_a(Check& c) {
    const auto a = fixtures::example_a();
    const Vec undamped{0.2, 0.4, 0.4};
    const auto p1 = pagerank(a, 1.0);
    const auto m1 = markovrank(a, 1.0);
    c.close(p1.values, undamped, 1e-9, "pagerank alpha=1");
    c.close(markovrank(a, 0.0).values, undamped, 1e-9, "markovrank eps=0");
    c.close(m1.values, {0.2108108, 0.3909910, 0.3981982}, 1e-6, "markovrank eps=1");
    c.expect(is_finer(m1, p1), "markovrank(1) not finer than pagerank(1)");
}

void example_b(Check& c) {
    const auto a = fixtures::example_b();
    c.close(pagerank(a, 0.85).values, {0.04849122, 0.05879560, 0.10877186, 0.39197066, 0.39197066}, 1e-6,
            "pagerank alpha=0.85");
    c.close(markovrank(a, 1.0).values, {0.01499916, 0.01859896, 0.03645396, 0.46497396, 0.46497396}, 1e-6,
            "markovrank eps=1");
    c.expect(markovrank(a, 1e-15).degenerate, "no degeneracy warning at eps=1e-15");
}

void example_c(Check& c) {
    const auto a = fixtures::example_c();
    c.expect(c.raises_multiplicity([&] { pagerank(a, 1.0); }), "pagerank alpha=1 accepted");
    c.expect(c.raises_multiplicity([&] { markovrank(a, 0.0); }), "markovrank eps=0 accepted");
    c.expect(c.raises_multiplicity([&] { markovrank(a, 1e-4); }), "markovrank eps=1e-4 accepted");
    c.no_throw(
        [&] {
            c.close(markovrank(a, 1e-3).values,
                    {6.944155e-06, 2.666630e-01, 1.999986e-01, 1.333343e-01, 1.999986e-01, 1.999986e-01}, 1e-6,
                    "markovrank eps=1e-3");
            c.close(markovrank(a, 1.0).values,
                    {0.006666667, 0.263099099, 0.198666667, 0.134234234, 0.198666667, 0.198666667}, 1e-6,
                    "markovrank eps=1");
        },
        "well-posed Example C rankings");
#if MARKOVRANK_HAVE_CLI
    c.expect(cli_exit({"markovrank", "pagerank", data("example_c.csv"), "--alpha", "1"}) == 2, "CLI alpha=1 exit");
    c.expect(cli_exit({"markovrank", "markovrank", data("example_c.csv"), "--epsilon", "0"}) == 2,
             "CLI eps=0 exit");
    c.expect(cli_exit({"markovrank", "markovrank", data("example_c.csv"), "--epsilon", "1e-4"}) == 2,
             "CLI eps=1e-4 exit");
    c.expect(cli_exit({"markovrank", "markovrank", data("example_c.csv"), "--epsilon", "1e-3"}) == 0,
             "CLI eps=1e-3 exit");
#endif
}

void example_d(Check& c) {
    const auto a = fixtures::example_d();
    const Vec low{5, 6, 4, 1, 3, 2};
    const Vec high{5, 6, 3, 1, 4, 2};
    for (double alpha : {0.85, 0.9}) c.expect(ranks(pagerank(a, alpha)) == low, "pagerank ranks at low alpha");
    for (double alpha : {0.95, 1.0}) c.expect(ranks(pagerank(a, alpha)) == high, "pagerank ranks at high alpha");
    for (double eps : {0.0, 1e-12, 0.1, 1.0}) c.expect(ranks(markovrank(a, eps)) == high, "markovrank ranks");
    c.expect(agreement_count(pagerank(a, 0.85), markovrank(a, 1.0)) == 4, "agreement count");
}

void construction_equivalence(Check& c) {
    SplitMix64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next() % 30;
        const double density = rng.uniform();
        const double zero_row_share = (trial % 3 == 0) ? 0.0 : 0.3;
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool zero_row = rng.bernoulli(zero_row_share);
            for (std::size_t j = 0; j < n; ++j)
                if (!zero_row && rng.bernoulli(density)) m(i, j) = 1.0 + static_cast<double>(rng.next() % 3);
        }
        const AdjacencyMatrix a(std::move(m));
        const double d = max_abs_diff(transition_generalized_inverse(a).matrix(),
                                      transition_from_patched(patch_zero_rows(a)).matrix());
        c.expect(d <= 1e-12, "constructions differ on trial " + std::to_string(trial));
    }
}

// Ranks of MarkovRank may only differ across epsilon on pairs whose scores
// are this close, relative to the larger score.
constexpr double near_tie_gap = 1e-2;

int order(double a, double b) {
    if (std::abs(a - b) <= default_tie_tolerance) return 0;
    return a < b ? -1 : 1;
}

// Largest relative gap in `x` among pairs ordered differently by `x` and `y`,
// skipping pairs with a member that `excused` marks.
double widest_discordant_gap(const Vec& x, const Vec& y, const std::function<bool(std::size_t)>& excused) {
    double widest = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (order(x[i], x[j]) == order(y[i], y[j]) || excused(i) || excused(j)) continue;
            widest = std::max(widest, std::abs(x[i] - x[j]) / std::max(x[i], x[j]));
        }
    return widest;
}

// The teleport column sends every node to the extra node with the same
// probability, so MarkovRank at epsilon equals PageRank at 2T / (2T + epsilon).
double equivalent_alpha(const AdjacencyMatrix& a, double eps) {
    const double total = patch_zero_rows(a).entries().total();
    return 2.0 * total / (2.0 * total + eps);
}

void epsilon_invariance(Check& c) {
    int found = 0;
    int identical = 0;
    int finer = 0;
    double widest = 0.0;
    const auto none = [](std::size_t) { return false; };
    for (std::uint64_t seed = 0; found < 100 && seed < 1000; ++seed) {
        const auto a = gen_er(50, 0.1, seed);
        if (!regular(a)) continue;
        ++found;
        const std::string tag = " (seed " + std::to_string(seed) + ")";
        const auto m1 = markovrank(a, 1.0);
        const auto m0 = markovrank(a, 0.0);
        bool same = true;
        for (double eps : {0.1, 0.5, 1.0}) {
            const auto m = markovrank(a, eps);
            c.expect(max_abs_diff(m.values, pagerank(a, equivalent_alpha(a, eps)).values) <= 1e-10,
                     "markovrank differs from its equivalent pagerank" + tag);
            same = same && is_identical_rank(m, m1);
            widest = std::max(widest, widest_discordant_gap(m1.values, m.values, none));
        }
        identical += same;
        finer += is_finer(m1, m0);
        widest = std::max(widest, widest_discordant_gap(m1.values, m0.values, none));
    }
    c.expect(found == 100, "only " + std::to_string(found) + " regular instances generated");
    c.expect(widest <= near_tie_gap, "rank change between well separated scores");
    c.info("identical across eps on " + std::to_string(identical) + "/" + std::to_string(found) +
           ", finer than eps=0 on " + std::to_string(finer) + "/" + std::to_string(found) +
           ", widest discordant gap " + std::to_string(widest));
}

void non_regular_e2(Check& c) {
    int identical = 0;
    int zero_only = 0;
    double widest = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = gen_block(e2_layout(80, 20, 0.1, seed));
        const std::string tag = " (seed " + std::to_string(seed) + ")";
        c.no_throw(
            [&] {
                const auto m1 = markovrank(a, 1.0);
                const auto m5 = markovrank(a, 0.5);
                const auto m0 = markovrank(a, 0.0);
                identical += is_identical_rank(m5, m1);
                widest = std::max(widest, widest_discordant_gap(m1.values, m5.values, [](std::size_t) { return false; }));
                const auto vanishing = [&](std::size_t i) { return m0.values[i] <= 1e-12; };
                const double gap = widest_discordant_gap(m1.values, m0.values, vanishing);
                zero_only += gap == 0.0;
                widest = std::max(widest, gap);
            },
            "E2 instance" + tag);
    }
    c.expect(widest <= near_tie_gap, "rank change between well separated scores");
    c.info("eps 0.5 and 1 identical on " + std::to_string(identical) +
           "/20, eps 0 disagreements confined to vanishing scores on " + std::to_string(zero_only) +
           "/20, widest discordant gap " + std::to_string(widest));
}

void eigen_vs_power(Check& c) {
    RankOptions power;
    power.method = Method::power;
    power.power.tolerance = itr_tolerance;
    for (const auto& a : {fixtures::four_node(), fixtures::example1(), fixtures::example_a(), fixtures::example_d()}) {
        c.expect(regular(a), "golden example not regular");
        for (double alpha : {0.85, 0.9, 1.0})
            c.expect(max_abs_diff(pagerank(a, alpha).values, pagerank(a, alpha, power).values) <= 1e-8,
                     "pagerank methods disagree");
        for (double eps : {0.0, 0.1, 1.0})
            c.expect(max_abs_diff(markovrank(a, eps).values, markovrank(a, eps, power).values) <= 1e-8,
                     "markovrank methods disagree");
    }
    const auto big = gen_er(500, 0.02, 77);
    c.expect(regular(big), "n=500 instance not regular");
    c.expect(max_abs_diff(pagerank(big, 1.0).values, markovrank(big, 0.0).values) <= 1e-10,
             "pagerank(1) != markovrank(0) at n=500");
}

void regularity_witnesses(Check& c) {
    const auto witness = [](const TransitionMatrix& m) { return is_regular(m).witness; };
    c.expect(witness(transition_from_patched(fixtures::four_node())) == std::optional<std::size_t>{5},
             "four-node witness");
    c.expect(witness(transition_from_patched(fixtures::example_d())) == std::optional<std::size_t>{4},
             "Example D witness");
    c.expect(!is_regular(transition_from_patched(patch_zero_rows(fixtures::example_b()))).regular,
             "Example B regular");
    for (const auto& a : {fixtures::four_node(), fixtures::example1(), fixtures::example_a(), fixtures::example_b(),
                          fixtures::example_c(), fixtures::example_d(), fixtures::k2()})
        for (double eps : {1e-3, 0.1, 1.0}) {
            const auto w = witness(transition_from_augmented(augment_adjacency(patch_zero_rows(a), eps)));
            c.expect(w && *w <= 3, "augmented witness above 3");
        }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "stationary oracle", 1e-3, stationary_oracle},
        {2, "four-node golden vectors", 0, four_node_golden},
        {3, "Example 1 golden vectors and rank identity", 0, example1_golden},
        {4, "Example A", 0, example_a},
        {5, "Example B", 0, example_b},
        {6, "Example C multiplicity", 0, example_c},
        {7, "Example D rank statistics", 0, example_d},
        {8, "construction equivalence", 0, construction_equivalence},
        {9, "epsilon invariance on regular instances", 60, epsilon_invariance},
        {10, "non-regular E2 instances", 120, non_regular_e2},
        {11, "exact and power agreement", 60, eigen_vs_power},
        {12, "regularity witnesses", 0, regularity_witnesses},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (crit.time_limit_s > 0 && seconds > crit.time_limit_s)
            check.expect(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(crit.time_limit_s));
        const bool pass = check.notes().empty();
        if (!pass) ++failures;
        std::printf("%s  #%-2d %s (%.3f s)\n", pass ? "PASS" : "FAIL", crit.id, crit.name.c_str(), seconds);
        for (const auto& note : check.notes()) std::printf("        %s\n", note.c_str());
        for (const auto& note : check.infos()) std::printf("        note: %s\n", note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

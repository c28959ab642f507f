// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance [--cli PATH] [--only 1,2,...] [--report FILE]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helpers.hpp"
#include "properties.hpp"

#include "cftp/families/asm.hpp"
#include "cftp/families/boxes.hpp"
#include "cftp/families/domino.hpp"
#include "cftp/families/filament.hpp"
#include "cftp/families/independent_sets.hpp"
#include "cftp/families/paths.hpp"
#include "cftp/ideal_system.hpp"
#include "cftp/oracle/census.hpp"
#include "cftp/oracle/chi_square.hpp"
#include "cftp/oracle/count.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/oracle/forward_bias.hpp"
#include "cftp/oracle/uniformity.hpp"
#include "cftp/sampler.hpp"

using namespace cftp;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kAlpha = 0.001;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void check(bool ok, std::string note) {
        pass = pass && ok;
        notes.push_back((ok ? "ok   " : "FAIL ") + std::move(note));
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

using test::antichain;
using test::chain;

IndependentSetSystem bwb_path() { return IndependentSetSystem({{0, 2}, {1}, {{0, 1}, {2, 1}}}); }

std::vector<BoxesParams> small_boxes() {
    std::vector<BoxesParams> out;
    for (int a = 1; a <= 18; ++a)
        for (int b = 1; a * b <= 18; ++b)
            for (int c = 1; a * b * c <= 18; ++c) out.push_back({a, b, c});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Outcome macmahon_cross_check() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t agree = 0;
    const auto all = small_boxes();
    for (const auto& p : all) {
        const BigInt e = enumerate_ideals(boxes_poset(p), 1'000'000).count;
        if (e == macmahon_count(p))
            ++agree;
        else
            o.check(false, fmt("(%d,%d,%d): enumeration %s vs formula %s", p.a, p.b, p.c, e.str().c_str(),
                               macmahon_count(p).str().c_str()));
    }
    const double secs = seconds_since(t0);
    o.check(agree == all.size(), fmt("%zu/%zu boxes with abc <= 18 agree", agree, all.size()));
    o.check(macmahon_count({2, 2, 2}) == 20 && macmahon_count({2, 2, 1}) == 6, "(2,2,2) -> 20, (2,2,1) -> 6");
    o.check(secs < 10.0, fmt("runtime %.2f s < 10 s", secs));
    return o;
}

template <MonotoneToggleSystem S>
void uniformity_case(Outcome& o, const std::string& label, const S& sys, std::size_t expected_states,
                     const Schedule& schedule, std::uint64_t seed) {
    const auto r = cftp_uniformity(sys, schedule, 100000, seed, 1.0, kAlpha);
    o.check(r.states.size() == expected_states && r.chi.pass,
            fmt("%-14s %-11s states %2zu  chi2 %8.3f  df %2zu  p %.4f", label.c_str(), schedule.descriptor().c_str(),
                r.states.size(), r.chi.statistic, r.chi.degrees, r.chi.p_value));
}

// The six systems of the statistical uniformity criterion under one
// schedule kind.
Outcome statistical_uniformity(ScheduleKind kind, std::uint64_t seed) {
    Outcome o;
    auto run = [&](const std::string& label, const auto& sys, std::size_t n) {
        if (kind == ScheduleKind::RankParity && !sys.is_graded()) return;
        uniformity_case(o, label, sys, n, Schedule::make(kind, sys), seed);
        seed += 1'000'000;
    };
    run("boxes(2,2,2)", IdealSystem(boxes_poset({2, 2, 2})), 20);
    run("2-chain", IdealSystem(chain(2)), 3);
    run("catalan(3)", IdealSystem(catalan_paths_system(3).poset), 5);
    run("asm(3)", AsmSystem(3), 7);
    run("domino 2x3", DominoSystem(rectangle_region(2, 3)), 3);
    run("indep b-w-b", bwb_path(), 5);
    return o;
}

Outcome exhaustive_census() {
    Outcome o;
    const auto one = exact_cftp_census(IdealSystem(chain(1)), Schedule::uniform(1), 1);
    o.check(one.states.size() == 2 && one.lower[0] == Rational(1, 2) && one.lower[1] == Rational(1, 2) &&
                one.uncoalesced == 0,
            "1-element, L=1: exactly 1/2 each, uncoalesced 0");

    auto brackets = [&](const char* label, const auto& c, Rational target) {
        bool ok = true;
        for (std::size_t k = 0; k < c.states.size(); ++k) ok = ok && c.lower[k] <= target && target <= c.upper[k];
        o.check(ok, fmt("%s: every state brackets %s (uncoalesced %s)", label,
                        rational_string(target).c_str(), rational_string(c.uncoalesced).c_str()));
    };
    brackets("2-chain, L=6", exact_cftp_census(IdealSystem(chain(2)), Schedule::uniform(2), 6), Rational(1, 3));
    brackets("antichain-2, L=4", exact_cftp_census(IdealSystem(antichain(2)), Schedule::uniform(2), 4),
             Rational(1, 4));
    return o;
}

Outcome bias_demonstration() {
    Outcome o;
    const IdealSystem sys(chain(2));
    const auto schedule = Schedule::uniform(2);
    const auto law = forward_bias_exact(sys);
    o.check(law.size() == 3 && law[0].second == Rational(1, 4) && law[1].second == Rational(1, 2) &&
                law[2].second == Rational(1, 4),
            "forward_bias_exact(2-chain) = (1/4, 1/2, 1/4)");

    const auto fwd = forward_uniformity(sys, schedule, 100000, kSeed, 1e-6);
    std::vector<double> p;
    for (const auto& [s, w] : law) p.push_back(rational_double(w));
    const double dev = max_sigma_deviation(fwd.counts, p, fwd.samples);
    o.check(dev < 3.0, fmt("forward empirical (%.4f, %.4f, %.4f) within %.2f sigma of exact law",
                           fwd.counts[0] / 1e5, fwd.counts[1] / 1e5, fwd.counts[2] / 1e5, dev));
    o.check(fwd.chi.p_value < 1e-6, fmt("forward vs uniform: chi2 %.1f, p %.3g < 1e-6 (rejected)",
                                        fwd.chi.statistic, fwd.chi.p_value));
    const auto back = cftp_uniformity(sys, schedule, 100000, kSeed + 500'000, 1.0, kAlpha);
    o.check(back.chi.pass, fmt("cftp vs uniform: chi2 %.3f, p %.4f (passes)", back.chi.statistic, back.chi.p_value));
    return o;
}

Outcome monotonicity_suites() {
    Outcome o;
    test::PropertyReport all;
    std::size_t instances = 0;
    for (const auto& [tag, any] : test::small_family_catalogue()) {
        all.merge(std::visit([&](const auto& sys) { return test::exhaustive_properties(sys, tag); }, any));
        ++instances;
    }
    o.check(all.violations == 0, fmt("exhaustive: %zu instances, %llu checks, %llu violations %s", instances,
                                     static_cast<unsigned long long>(all.checks),
                                     static_cast<unsigned long long>(all.violations), all.first.c_str()));
    const auto b = test::random_properties(IdealSystem(boxes_poset({4, 4, 4})), "boxes(4,4,4)", 10000, kSeed);
    const auto f = test::random_properties(FilamentSystem({4, 4, 4}), "boxes(4,4,4) filament", 10000, kSeed + 1);
    const auto a = test::random_properties(AsmSystem(4), "asm(4)", 10000, kSeed + 2);
    for (const auto* r : {&b, &f, &a})
        o.check(r->violations == 0, fmt("randomized: %llu checks, %llu violations %s",
                                        static_cast<unsigned long long>(r->checks),
                                        static_cast<unsigned long long>(r->violations), r->first.c_str()));
    return o;
}

Outcome determinism_and_reuse() {
    Outcome o;
    std::size_t identical = 0, runs = 0;
    auto same_bytes = [&](const FamilyInstance& f, ScheduleKind kind, double q, std::uint64_t seed) {
        std::visit(
            [&](const auto& sys) {
                if (kind == ScheduleKind::RankParity && !sys.is_graded()) return;
                const auto schedule = Schedule::make(kind, sys);
                CftpOptions opt;
                opt.q = q;
                const std::string a = record_to_json(f, cftp_sample(sys, RandomnessOracle(seed), schedule, opt)).dump();
                const std::string b = record_to_json(f, cftp_sample(sys, RandomnessOracle(seed), schedule, opt)).dump();
                ++runs;
                identical += a == b;
            },
            f.system);
    };
    const std::vector<FamilyInstance> families{
        make_family("boxes", parse_params("a=3,b=3,c=3")),
        make_family("boxes", parse_params("a=3,b=3,c=3,moves=filament")),
        make_family("asm", parse_params("n=5")),
        make_family("domino", parse_params("w=4,h=4")),
        make_family("catalan", parse_params("n=5")),
    };
    for (const auto& f : families)
        for (ScheduleKind kind : {ScheduleKind::Uniform, ScheduleKind::Sweep, ScheduleKind::RankParity})
            for (double q : {0.5, 1.0, 2.0})
                for (std::uint64_t seed : {kSeed, kSeed + 1, std::uint64_t{0}}) same_bytes(f, kind, q, seed);
    o.check(identical == runs, fmt("%zu/%zu repeated runs gave byte-identical records", identical, runs));

    // every time step must see the same (site, coin) in every doubling
    // iteration that reaches back to it
    std::size_t mismatches = 0, steps = 0, short_visits = 0, checked = 0;
    const IdealSystem sys(boxes_poset({3, 3, 3}));
    for (ScheduleKind kind : {ScheduleKind::Uniform, ScheduleKind::Sweep, ScheduleKind::RankParity}) {
        const auto schedule = Schedule::make(kind, sys);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::map<std::int64_t, std::pair<Site, double>> first;
            std::map<std::int64_t, std::size_t> visits;
            CftpOptions opt;
            opt.observer = [&](std::int64_t t, Site x, double c) {
                ++steps;
                ++visits[t];
                auto [it, fresh] = first.try_emplace(t, x, c);
                if (!fresh && (it->second.first != x || it->second.second != c)) ++mismatches;
            };
            const auto rec = cftp_sample(sys, RandomnessOracle(seed), schedule, opt);
            // horizons tried: 1, 2, 4, ..., T_final; step t is in each H >= -t
            for (const auto& [t, n] : visits) {
                std::size_t expect = 0;
                for (std::uint64_t h = 1; h <= rec.T_final; h *= 2) expect += static_cast<std::uint64_t>(-t) <= h;
                short_visits += n != expect;
            }
            ++checked;
        }
    }
    o.check(mismatches == 0 && short_visits == 0,
            fmt("%zu instrumented runs, %zu observed steps: %zu (site, coin) mismatches, %zu wrong visit counts",
                checked, steps, mismatches, short_visits));
    return o;
}

Outcome figure1_scale(const std::string& cli) {
    Outcome o;
    if (!cli.empty()) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string cmd =
            "\"" + cli + "\" figure1 --side 32 --seed " + std::to_string(kSeed) + " --out acceptance_figure1.svg > acceptance_figure1.json";
        const int rc = std::system(cmd.c_str());
        const double secs = seconds_since(t0);
        o.check(rc == 0 && secs < 600, fmt("`figure1 --side 32` one sample in %.1f s (< 600 s)", secs));
    } else {
        o.check(false, "no --cli path given, figure1 command not timed");
    }

    const FilamentSystem sys({32, 32, 32});
    const auto schedule = Schedule::uniform(sys.site_count());
    constexpr int kSamples = 100;
    double sum = 0, sum_sq = 0, slowest = 0;
    for (int i = 0; i < kSamples; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rec = cftp_sample(sys, RandomnessOracle(kSeed + 7000 + i), schedule);
        slowest = std::max(slowest, seconds_since(t0));
        const double v = static_cast<double>(sys.rank_of(rec.state));
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / kSamples;
    const double var = (sum_sq - kSamples * mean * mean) / (kSamples - 1);
    const double se = std::sqrt(var / kSamples);
    const double z = (mean - 16384.0) / se;
    o.check(slowest < 600, fmt("slowest of %d samples %.1f s", kSamples, slowest));
    o.check(std::abs(z) < 4.0, fmt("mean |I| %.1f, SE %.1f, %.2f SE from 16384", mean, se, z));
    return o;
}

Outcome q_bias() {
    Outcome o;
    const IdealSystem point(chain(1));
    CftpOptions opt;
    opt.q = 2.0;
    std::uint64_t up = 0;
    for (std::uint64_t i = 0; i < 10000; ++i)
        up += cftp_sample(point, RandomnessOracle(kSeed + i), Schedule::uniform(1), opt).state.size();
    const double freq = static_cast<double>(up) / 1e4;
    o.check(std::abs(freq - 2.0 / 3) <= 0.01, fmt("1-element, q=2: P({x}) = %.4f, target 0.6667 +- 0.01", freq));

    const IdealSystem boxes(boxes_poset({2, 2, 1}));
    for (double q : {0.5, 2.0}) {
        const auto r = cftp_uniformity(boxes, Schedule::uniform(boxes.site_count()), 100000,
                                       kSeed + static_cast<std::uint64_t>(q * 1'000'000), q, kAlpha);
        o.check(r.total_variation < 0.02 && r.off_support == 0,
                fmt("boxes(2,2,1), q=%.1f: total variation %.4f < 0.02", q, r.total_variation));
    }
    return o;
}

Outcome rank_sampling() {
    Outcome o;
    const IdealSystem sys(boxes_poset({2, 2, 2}));
    const auto schedule = Schedule::uniform(sys.site_count());
    const auto e = enumerate_states(sys, 100);
    std::vector<OrderIdeal> rank4;
    for (const auto& s : e.states)
        if (sys.rank_of(s) == 4) rank4.push_back(s);
    const std::size_t cells = rank4.size();
    o.check(BigInt(cells) == e.by_rank[4], fmt("oracle: %zu ideals of rank 4", cells));

    // at least 200 expected per cell; seeds spaced past max_tries so no two
    // draws share a try
    const std::size_t n = 200 * cells;
    std::vector<std::uint64_t> counts(cells, 0);
    std::size_t wrong_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto rec = sample_rank(sys, 4, kSeed + (i << 20), schedule);
        const auto it = std::find(rank4.begin(), rank4.end(), rec.state);
        if (it == rank4.end())
            ++wrong_rank;
        else
            ++counts[static_cast<std::size_t>(it - rank4.begin())];
    }
    const auto chi = chi_square_uniformity(counts, kAlpha);
    o.check(wrong_rank == 0 && chi.pass, fmt("N=%zu: chi2 %.3f, df %zu, p %.4f, off-rank draws %zu", n, chi.statistic,
                                             chi.degrees, chi.p_value, wrong_rank));
    return o;
}

Outcome schedule_equivalence() {
    Outcome o;
    for (auto [kind, seed] : {std::pair{ScheduleKind::Sweep, kSeed + 30'000'000},
                              std::pair{ScheduleKind::RankParity, kSeed + 60'000'000}}) {
        const Outcome u = statistical_uniformity(kind, seed);
        o.pass = o.pass && u.pass;
        o.notes.insert(o.notes.end(), u.notes.begin(), u.notes.end());
    }
    auto batch = [&](const std::string& label, const auto& sys) {
        const auto r = test::parity_batch_properties(sys, label, 1000, kSeed);
        o.check(r.violations == 0, fmt("%-14s batch_parity_update: 1000 trials, %llu order dependences",
                                       label.c_str(), static_cast<unsigned long long>(r.violations)));
    };
    batch("boxes(2,2,2)", IdealSystem(boxes_poset({2, 2, 2})));
    batch("boxes(3,3,3)", IdealSystem(boxes_poset({3, 3, 3})));
    batch("2-chain", IdealSystem(chain(2)));
    batch("catalan(5)", IdealSystem(catalan_paths_system(5).poset));
    batch("asm(5)", AsmSystem(5));
    batch("domino 4x4", DominoSystem(rectangle_region(4, 4)));
    batch("indep b-w-b", bwb_path());
    return o;
}

Outcome recursive_parity() {
    Outcome o;
    auto run = [&](const std::string& label, const Poset& p, std::uint64_t seed) {
        const auto e = enumerate_ideals(p, 1000);
        std::mt19937_64 rng(seed);
        RecursiveSampler sampler(p);
        std::vector<std::uint64_t> counts(e.states.size(), 0);
        std::size_t invalid = 0;
        for (int i = 0; i < 100000; ++i) {
            const std::size_t k = e.index_of(sampler.sample(rng));
            if (k == e.states.size())
                ++invalid;
            else
                ++counts[k];
        }
        const auto chi = chi_square_uniformity(counts, kAlpha);
        o.check(invalid == 0 && chi.pass, fmt("%-12s N=100000: chi2 %.3f, df %zu, p %.4f", label.c_str(),
                                              chi.statistic, chi.degrees, chi.p_value));
    };
    run("2-chain", chain(2), kSeed);
    run("boxes(2,2,1)", boxes_poset({2, 2, 1}), kSeed + 1);

    std::size_t agree = 0;
    const auto all = small_boxes();
    for (const auto& p : all) {
        const Poset poset = boxes_poset(p);
        agree += count_ideals(poset) == enumerate_ideals(poset, 1'000'000).count;
    }
    o.check(agree == all.size(), fmt("count_ideals matches enumeration on %zu/%zu boxes", agree, all.size()));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string cli;
    std::vector<int> only;
    app.add_option("--cli", cli, "path to the cftp executable");
    std::string report_path = "acceptance_report.txt";
    app.add_option("--only", only, "criteria to run")->delimiter(',');
    app.add_option("--report", report_path, "copy of the output (empty: none)");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> wanted(only.begin(), only.end());

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"MacMahon cross-check", macmahon_cross_check},
        {"exact uniformity, statistical", [] { return statistical_uniformity(ScheduleKind::Uniform, kSeed); }},
        {"exact uniformity, exhaustive", exhaustive_census},
        {"forward coupling bias vs CFTP", bias_demonstration},
        {"monotonicity and sandwich", monotonicity_suites},
        {"determinism and randomness reuse", determinism_and_reuse},
        {"32x32x32 hexagon scale", [&] { return figure1_scale(cli); }},
        {"q-biased sampling", q_bias},
        {"rank sampling", rank_sampling},
        {"schedule equivalence", schedule_equivalence},
        {"recursive sampler parity", recursive_parity},
    };

    std::ofstream report;
    if (!report_path.empty()) report.open(report_path);
    auto emit = [&](const std::string& line) {
        std::cout << line << std::endl;
        if (report) report << line << "\n";
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!wanted.empty() && !wanted.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.check(false, std::string("threw: ") + e.what());
        }
        for (const auto& n : out.notes) emit("    " + n);
        emit("criterion " + std::to_string(id) + " [" + criteria[i].first + "]: " + (out.pass ? "PASS" : "FAIL") +
             fmt("  (%.1f s)", seconds_since(t0)));
        failed += !out.pass;
    }
    emit(failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : "acceptance: PASS");
    return failed ? 1 : 0;
}

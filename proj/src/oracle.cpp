#include "lecell/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include "lecell/bijections.hpp"
#include "lecell/io.hpp"
#include "lecell/legame.hpp"
#include "lecell/patterns.hpp"
#include "lecell/preference.hpp"

namespace lecell {

std::string PairSpec::name() const {
    return "(" + type_name(type) + "_" + std::to_string(n) + "," + std::to_string(j) + ")";
}

std::vector<PairSpec> classical_pairs(int max_a_n, int max_bd_n) {
    std::vector<PairSpec> out;
    for (int r = 1; r <= max_a_n; ++r)
        for (int j = 1; j <= r; ++j) out.push_back({Type::A, r, j});
    for (int m = 1; m <= max_bd_n; ++m) {
        out.push_back({Type::B, m, m});
        if (m >= 2) out.push_back({Type::B, m, 1});
    }
    for (int m = 2; m <= max_bd_n; ++m) {
        out.push_back({Type::D, m, m});
        if (m >= 3) {
            out.push_back({Type::D, m, m - 1});
            out.push_back({Type::D, m, 1});
        }
    }
    return out;
}

namespace {

// Runs fn(k, report) for k < count across `jobs` threads; reports are
// merged in index order so the first counterexample does not depend on
// scheduling.
SweepReport run_indexed(const std::string& name, std::size_t count, int jobs,
                        const std::function<void(std::size_t, SweepReport&)>& fn) {
    std::vector<SweepReport> parts(count);
    auto worker = [&](std::size_t begin, std::size_t step) {
        for (std::size_t k = begin; k < count; k += step) fn(k, parts[k]);
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t, jobs);
        for (auto& th : pool) th.join();
    }
    SweepReport out{name, true, 0, ""};
    for (auto& r : parts) {
        out.checked += r.checked;
        if (!r.ok && out.ok) {
            out.ok = false;
            out.counterexample = r.counterexample;
        }
    }
    return out;
}

void fail(SweepReport& r, const std::string& what) {
    if (r.ok) r.counterexample = what;
    r.ok = false;
}

template <class Fn>
void for_each_submask(Mask shape, Fn fn) {
    Mask s = shape;
    for (;;) {
        fn(s);
        if (s == 0) break;
        s = (s - 1) & shape;
    }
}

}  // namespace

SweepReport sweep_equivalence(const PairSpec& pair, int jobs) {
    auto p = build_poset(pair.type, pair.n, pair.j);
    auto ideals = order_ideals(*p);
    return run_indexed("equivalence " + pair.name(), ideals.size(), jobs, [&](std::size_t k, SweepReport& r) {
        for_each_submask(ideals[k], [&](Mask plus) {
            Diagram d = make_diagram(p, ideals[k], plus);
            ++r.checked;
            if (is_le_pattern(d) != is_pds(d) && r.ok)
                fail(r, pair.name() + " " + to_inline(d) + (is_pds(d) ? " is Le but fails the pattern test"
                                                                      : " passes the pattern test but is not Le"));
        });
    });
}

QPolynomial bruhat_interval_polynomial(const WeylElement& w) {
    const auto& rs = w.root_system();
    std::unordered_set<WeylElement, WeylHash> below{WeylElement::identity(rs)};
    for (int s : w.reduced_word()) {
        std::vector<WeylElement> add;
        for (const auto& x : below) add.push_back(multiply(x, simple_reflection(rs, s)));
        below.insert(add.begin(), add.end());
    }
    const int lw = w.length();
    std::vector<BigInt> c(lw + 1, 0);
    for (const auto& x : below) c[lw - x.length()] += 1;
    return QPolynomial(std::move(c));
}

SweepReport sweep_cell_counts(const PairSpec& pair) {
    auto p = build_poset(pair.type, pair.n, pair.j);
    SweepReport r{"cell counts " + pair.name(), true, 0, ""};
    for (Mask m : order_ideals(*p)) {
        std::vector<BigInt> c(popcount(m) + 1, 0);
        for_each_le_diagram(p, m, [&](const Diagram& d) { c[d.plus_count()] += 1; });
        QPolynomial le(std::move(c));
        QPolynomial bruhat = bruhat_interval_polynomial(ideal_element(*p, m));
        ++r.checked;
        if (!(le == bruhat))
            fail(r, pair.name() + " ideal " + to_inline(make_diagram(p, m, 0)) + ": Le count " + le.to_string() +
                        ", Bruhat " + bruhat.to_string());
    }
    return r;
}

SweepReport sweep_le_game(const PairSpec& pair, std::uint64_t seed, int jobs) {
    auto p = build_poset(pair.type, pair.n, pair.j);
    auto ideals = order_ideals(*p);
    const auto& moves = all_moves(*p);
    return run_indexed("le-game " + pair.name(), ideals.size(), jobs, [&](std::size_t k, SweepReport& r) {
        for_each_submask(ideals[k], [&](Mask plus) {
            if (!r.ok) return;
            Diagram d = make_diagram(p, ideals[k], plus);
            ++r.checked;
            const Diagram target = leify_direct(d);
            const WeylElement v = value(d);
            auto det = play_le_game(d, moves, Strategy::Deterministic, seed, true);
            auto rnd = play_le_game(d, moves, Strategy::Random, seed + r.checked, true);
            for (const auto* game : {&det, &rnd})
                for (const auto& step : game->steps)
                    if (value(step.after) != v) {
                        fail(r, pair.name() + " " + to_inline(d) + ": value changed by a " +
                                    family_name(step.move.family) + " move");
                        return;
                    }
            if (!(det.result == target)) fail(r, pair.name() + " " + to_inline(d) + ": deterministic game ends at " +
                                                     to_inline(det.result) + ", expected " + to_inline(target));
            else if (!(rnd.result == target))
                fail(r, pair.name() + " " + to_inline(d) + ": random game ends at " + to_inline(rnd.result));
        });
    });
}

SweepReport sweep_moves(const PairSpec& pair) {
    auto p = build_poset(pair.type, pair.n, pair.j);
    SweepReport r{"moves " + pair.name(), true, 0, ""};
    for (MoveFamily f : complete_families(*p))
        for (const auto& m : enumerate_moves(*p, f)) {
            ++r.checked;
            if (!verify_move_triple(*p, m))
                fail(r, pair.name() + " " + family_name(f) + " move x=" + std::to_string(m.x) +
                            " y=" + std::to_string(m.y) + " fails the root criterion");
        }
    return r;
}

SweepReport sweep_triangle_A(int n) {
    SweepReport r{"triangle A n=" + std::to_string(n), true, 0, ""};
    for (int j = 1; j < n; ++j) {
        auto p = build_poset(Type::A, n - 1, j);
        std::set<DecoratedPermutation> image;
        long long count = 0;
        std::map<Mask, std::vector<int>> positions;
        for (Mask m : order_ideals(*p))
            for_each_le_diagram(p, m, [&](const Diagram& d) {
                ++count;
                ++r.checked;
                auto direct = phi3(d);
                if (!(direct == phi1(*p, phi2(d))))
                    fail(r, "(A_" + std::to_string(n - 1) + "," + std::to_string(j) + ") " + to_inline(d) +
                                ": phi3 " + to_string(direct) + " differs from phi1 o phi2");
                if (direct.nonexcedances() != j) fail(r, to_inline(d) + ": wrong number of nonexcedances");
                std::vector<int> pos;
                for (int i = 1; i <= n; ++i)
                    if (direct.perm[i - 1] < i || (direct.is_fixed(i) && direct.clockwise[i - 1])) pos.push_back(i);
                auto [it, fresh] = positions.emplace(m, pos);
                if (!fresh && it->second != pos) fail(r, to_inline(d) + ": nonexcedance positions depend on filling");
                image.insert(direct);
            });
        auto all = decorated_permutations_A(n, j);
        std::set<DecoratedPermutation> range(all.begin(), all.end());
        if (static_cast<long long>(image.size()) != count) fail(r, "phi3 is not injective for j=" + std::to_string(j));
        if (image != range) fail(r, "phi3 misses decorated permutations for j=" + std::to_string(j));
    }
    return r;
}

SweepReport sweep_triangle_B(int n) {
    SweepReport r{"triangle B n=" + std::to_string(n), true, 0, ""};
    auto p = build_poset(Type::B, n, n);
    std::set<DecoratedPermutation> image;
    long long count = 0;
    for (Mask m : order_ideals(*p))
        for_each_le_diagram(p, m, [&](const Diagram& d) {
            ++count;
            ++r.checked;
            auto direct = phi3_B(d);
            if (!(direct == phi1_B(*p, phi2_B(d))))
                fail(r, "(B_" + std::to_string(n) + "," + std::to_string(n) + ") " + to_inline(d) + ": phi3 " +
                            to_string(direct) + " differs from phi1 o phi2");
            image.insert(direct);
        });
    auto all = decorated_permutations_B(n);
    std::set<DecoratedPermutation> range(all.begin(), all.end());
    if (static_cast<long long>(image.size()) != count) fail(r, "phi3_B is not injective");
    if (image != range) fail(r, "phi3_B misses decorated permutations");
    return r;
}

SweepReport sweep_preference(int n) {
    SweepReport r{"preference n=" + std::to_string(n), true, 0, ""};
    const auto prefs = preference_functions(n);
    for (const auto& f : prefs) {
        ++r.checked;
        auto pi = alpha_inverse(f);
        if (!is_in_J(pi) || alpha(pi) != f || !(alpha_inverse(alpha(pi)) == pi))
            fail(r, "alpha round trip fails at " + preference_to_string(f));
    }
    const auto atomic = atomic_preference_functions(n);
    if (n == 1) {
        if (!(phi_D(psi_grid(atomic.at(0))) == atomic.at(0))) fail(r, "Phi o Psi fails at (1)");
        return r;
    }
    for (const auto& f : atomic) {
        ++r.checked;
        if (phi_D(psi(f)) != f) fail(r, "Phi o Psi fails at " + preference_to_string(f));
    }
    auto pd = build_poset(Type::D, n, n);
    long long max_d = 0;
    for_each_le_diagram(pd, pd->full(), [&](const Diagram& d) {
        ++max_d;
        ++r.checked;
        auto f = phi_D(d);
        if (!is_atomic(f)) fail(r, "Phi of " + to_inline(d) + " is not atomic");
        else if (!(psi(f) == d)) fail(r, "Psi o Phi fails at " + to_inline(d));
    });
    if (max_d != static_cast<long long>(atomic.size()))
        fail(r, "maximal (D_n,n) count " + std::to_string(max_d) + " vs atomic " + std::to_string(atomic.size()));
    auto pb = build_poset(Type::B, n, n);
    long long max_b = 0;
    for_each_le_diagram(pb, pb->full(), [&](const Diagram& d) {
        ++max_b;
        if (!d.is_plus(0)) return;
        ++r.checked;
        if (!(preference_to_max_B_le(max_B_le_to_preference(d)) == d))
            fail(r, "B round trip fails at " + to_inline(d));
    });
    if (max_b != 2 * static_cast<long long>(prefs.size()))
        fail(r, "maximal (B_n,n) count " + std::to_string(max_b) + " vs 2*" + std::to_string(prefs.size()));
    return r;
}

}  // namespace lecell

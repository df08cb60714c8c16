#include "posettop/miner.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "posettop/rng.hpp"
#include "posettop/simplicial.hpp"

namespace posettop {

HomologyComparison compare_homologies(const Poset& P, int max_dim, const EnumerationCaps& caps) {
    HomologyComparison out;
    out.cube = cubical_homology(P, max_dim, caps);
    out.simpl = simplicial_homology(order_complex(P), max_dim);
    for (int d = 0; d <= max_dim; ++d)
        if (out.cube[static_cast<std::size_t>(d)] != out.simpl[static_cast<std::size_t>(d)])
            out.mismatch_degrees.push_back(d);
    return out;
}

namespace {

std::optional<MineFinding> run_trial(const MineConfig& cfg, int trial) {
    const Poset P = random_poset(cfg.size, cfg.density, mix64(cfg.seed ^ static_cast<std::uint64_t>(trial)));
    HomologyComparison cmp = compare_homologies(P, cfg.max_dim, cfg.caps);
    if (!cmp.mismatch()) return std::nullopt;

    // Shrink while the mismatch survives.
    Poset cur = P;
    int budget = cfg.shrink_budget;
    auto still_bad = [&](const Poset& Q) {
        if (budget <= 0 || Q.size() == 0) return false;
        --budget;
        try {
            return compare_homologies(Q, cfg.max_dim, cfg.caps).mismatch();
        } catch (const CapExceeded&) {
            return false;
        }
    };
    Poset core = remove_beat_points(cur);
    if (core.size() < cur.size() && still_bad(core)) cur = core;
    bool improved = true;
    while (improved && budget > 0) {
        improved = false;
        for (int x = 0; x < cur.size(); ++x) {
            std::vector<ElementId> keep;
            for (int y = 0; y < cur.size(); ++y)
                if (y != x) keep.push_back(y);
            if (keep.empty()) break;
            Poset cand = cur.restrict(keep);
            if (still_bad(cand)) {
                cur = cand;
                improved = true;
                break;
            }
        }
    }

    MineFinding f;
    f.trial = trial;
    f.original = P;
    f.shrunk = cur;
    f.comparison = compare_homologies(cur, cfg.max_dim, cfg.caps);
    return f;
}

}  // namespace

MineReport mine(const MineConfig& cfg) {
    if (cfg.trials < 1) throw Error("mine requires trials >= 1");
    MineReport report;
    report.trials = cfg.trials;

    std::vector<std::optional<MineFinding>> slots(static_cast<std::size_t>(cfg.trials));
    std::vector<char> skipped(static_cast<std::size_t>(cfg.trials), 0);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= cfg.trials) return;
            try {
                slots[static_cast<std::size_t>(t)] = run_trial(cfg, t);
            } catch (const CapExceeded&) {
                skipped[static_cast<std::size_t>(t)] = 1;
            }
        }
    };
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < cfg.trials; ++t) {
        if (skipped[static_cast<std::size_t>(t)]) ++report.skipped_cap;
        if (slots[static_cast<std::size_t>(t)]) report.findings.push_back(*slots[static_cast<std::size_t>(t)]);
    }
    return report;
}

}  // namespace posettop

#include "dirhom/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "dirhom/dfc_homology.hpp"
#include "dirhom/path_homology.hpp"

namespace dirhom {

ThresholdSchedule magnitude_thresholds(const WeightedDigraph& wg) {
    ThresholdSchedule schedule;
    schedule.values.reserve(wg.weights().size());
    for (const Decimal& w : wg.weights()) schedule.values.push_back(w.magnitude());
    std::sort(schedule.values.begin(), schedule.values.end());
    schedule.values.erase(std::unique(schedule.values.begin(), schedule.values.end()),
                          schedule.values.end());
    return schedule;
}

Digraph subgraph_at_threshold(const WeightedDigraph& wg, const Decimal& t) {
    std::vector<Arc> kept;
    const std::vector<Arc>& arcs = wg.digraph().arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (wg.weights()[i].magnitude() >= t) kept.push_back(arcs[i]);
    return Digraph::from_edge_list(wg.digraph().vertex_count(), kept);
}

BettiCurve betti_curve(const WeightedDigraph& wg, HomologyKind kind, int max_degree, bool reduced,
                       FieldSpec field, int threads) {
    ThresholdSchedule schedule = magnitude_thresholds(wg);

    BettiCurve curve;
    curve.kind = kind;
    curve.reduced = reduced;
    curve.field = field;
    curve.max_degree = max_degree;
    curve.threshold_count = schedule.count();
    curve.rows.resize(schedule.count());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= schedule.count()) break;
            Digraph sub = subgraph_at_threshold(wg, schedule.values[i]);
            HomologySummary summary = kind == HomologyKind::path
                                          ? path_betti(sub, max_degree, reduced, field)
                                          : dfc_betti(sub, max_degree, field, reduced);
            curve.rows[i] = BettiCurveRow{schedule.values[i], i + 1, summary.betti_vector()};
        }
    };

    int pool = std::max(1, threads);
    if (pool == 1 || schedule.count() <= 1) {
        worker();
    } else {
        std::vector<std::thread> extra;
        for (int t = 1; t < pool; ++t) extra.emplace_back(worker);
        worker();
        for (std::thread& t : extra) t.join();
    }
    return curve;
}

std::string to_csv(const BettiCurve& curve) {
    std::string out = "threshold,normalized";
    for (int p = 0; p <= curve.max_degree; ++p) out += ",beta_" + std::to_string(p);
    out += "\n";
    for (const BettiCurveRow& row : curve.rows) {
        out += row.threshold.to_string();
        double normalized =
            static_cast<double>(row.index) / static_cast<double>(curve.threshold_count);
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, normalized);
        out += ',';
        out.append(buf, res.ptr);
        for (Index b : row.betti) out += ',' + std::to_string(b);
        out += '\n';
    }
    return out;
}

}  // namespace dirhom

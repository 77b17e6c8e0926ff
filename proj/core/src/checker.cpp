#include "phimet/checker.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace phimet {

namespace {

// alt < w beyond tolerance: the weight demonstrably overshoots.
bool strictly_below(const Weight& alt, const Weight& w, const Tolerance& tol) {
    if (alt.is_exact()) return alt.compare(w) < 0;
    double a = alt.as_double(), b = w.as_double();
    double slack = std::max(tol.abs, tol.rel * std::max(std::abs(a), std::abs(b)));
    return a < b - slack;
}

EdgeCheck check_edge(const WeightedGraph& g, const TriangleFamily& family,
                     int e) {
    const auto& rec = g.edge(e);
    int source = g.label(rec.u) <= g.label(rec.v) ? rec.u : rec.v;
    int target = source == rec.u ? rec.v : rec.u;
    SingleSource search = single_source(g, family, source, e);
    const auto& alt = search.dist[static_cast<size_t>(target)];
    EdgeCheck result{e, rec.w, rec.w, true, false};
    if (!alt) return result;  // bridge edge, no competing path
    const Tolerance& tol = g.mode().tolerance();
    result.boundary = alt->approx_eq(rec.w, tol);
    result.pass = !strictly_below(*alt, rec.w, tol);
    if (alt->less(rec.w)) result.d = *alt;
    return result;
}

}  // namespace

Verdict check(const WeightedGraph& g, const TriangleFamily& family,
              int threads) {
    family.require_mode(g.mode());
    Verdict verdict{family.name(), g.mode(), false, {}, {}};
    Weight floor = family.domain_floor(g.mode());
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).w.less(floor))
            verdict.domain_violations.push_back(
                DomainViolation{e, g.edge(e).w, floor});
    if (!verdict.domain_violations.empty()) return verdict;

    int m = g.edge_count();
    verdict.edges.resize(static_cast<size_t>(m),
                         EdgeCheck{-1, floor, floor, true, false});
    threads = std::max(1, threads);
    auto run = [&](int first, int last) {
        for (int e = first; e < last; ++e)
            verdict.edges[static_cast<size_t>(e)] = check_edge(g, family, e);
    };
    if (threads == 1 || m < 2 * threads) {
        run(0, m);
    } else {
        std::vector<std::thread> pool;
        int chunk = (m + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int first = t * chunk, last = std::min(m, first + chunk);
            if (first >= last) break;
            pool.emplace_back(run, first, last);
        }
        for (auto& worker : pool) worker.join();
    }
    verdict.metrizable =
        std::all_of(verdict.edges.begin(), verdict.edges.end(),
                    [](const EdgeCheck& ec) { return ec.pass; });
    return verdict;
}

ViolationCertificate certificate(const WeightedGraph& g,
                                 const TriangleFamily& family, int edge_index,
                                 const SingleSource& search) {
    const auto& rec = g.edge(edge_index);
    int source = g.label(rec.u) <= g.label(rec.v) ? rec.u : rec.v;
    int target = source == rec.u ? rec.v : rec.u;
    if (!search.dist[static_cast<size_t>(target)])
        throw InternalError("no alternative path to certify edge {" +
                            g.label(rec.u) + ", " + g.label(rec.v) + "}");

    std::vector<VertexId> cycle;
    for (int v = target; v != source;) {
        cycle.push_back(g.label(v));
        int p = search.pred[static_cast<size_t>(v)];
        if (p < 0 || cycle.size() > static_cast<size_t>(g.vertex_count()))
            throw InternalError("predecessor chain does not reach the source");
        v = p;
    }
    cycle.push_back(g.label(source));
    std::reverse(cycle.begin(), cycle.end());

    Weight rhs = path_weight(family, g, cycle);
    ViolationCertificate cert{{g.label(source), g.label(target)},
                              std::move(cycle), rec.w, std::move(rhs)};
    const Tolerance& tol = g.mode().tolerance();
    if (!strictly_below(cert.rhs, cert.lhs, tol))
        throw InternalError("certificate does not witness a violation");
    return cert;
}

std::vector<ViolationCertificate> certificates(const WeightedGraph& g,
                                               const TriangleFamily& family,
                                               const Verdict& verdict) {
    std::vector<ViolationCertificate> out;
    for (const auto& ec : verdict.edges) {
        if (ec.pass) continue;
        const auto& rec = g.edge(ec.edge_index);
        int source = g.label(rec.u) <= g.label(rec.v) ? rec.u : rec.v;
        SingleSource search = single_source(g, family, source, ec.edge_index);
        out.push_back(certificate(g, family, ec.edge_index, search));
    }
    return out;
}

bool revalidate(const WeightedGraph& g, const TriangleFamily& family,
                const ViolationCertificate& cert) {
    if (cert.cycle.size() < 2) return false;
    // The closing edge must be the certified one.
    if (!((cert.cycle.front() == cert.edge.first &&
           cert.cycle.back() == cert.edge.second) ||
          (cert.cycle.front() == cert.edge.second &&
           cert.cycle.back() == cert.edge.first)))
        return false;
    int u = g.index_of(cert.edge.first), v = g.index_of(cert.edge.second);
    if (u < 0 || v < 0) return false;
    int e = g.find_edge(u, v);
    if (e < 0) return false;
    if (!(g.edge(e).w == cert.lhs)) return false;
    Weight recomputed = [&]() -> Weight {
        try {
            return path_weight(family, g, cert.cycle);
        } catch (const InvalidPath&) {
            return cert.lhs;  // sentinel: marks the cycle malformed
        }
    }();
    if (!(recomputed == cert.rhs)) return false;
    return strictly_below(cert.rhs, cert.lhs, g.mode().tolerance());
}

nlohmann::json check_report(const WeightedGraph& g, const Verdict& verdict,
                            const std::vector<ViolationCertificate>& certs) {
    nlohmann::json report;
    report["family"] = verdict.family;
    if (verdict.mode.is_exact()) {
        report["mode"] = {{"kind", "exact"}};
    } else {
        report["mode"] = {{"kind", "float"},
                          {"rel_tol", verdict.mode.tolerance().rel},
                          {"abs_tol", verdict.mode.tolerance().abs}};
    }
    report["metrizable"] = verdict.metrizable;

    report["domain_violations"] = nlohmann::json::array();
    for (const auto& dv : verdict.domain_violations) {
        const auto& rec = g.edge(dv.edge_index);
        report["domain_violations"].push_back(
            {{"edge", {g.label(rec.u), g.label(rec.v)}},
             {"w", dv.w.lexeme()},
             {"floor", dv.floor.lexeme()}});
    }

    auto cert_for = [&](const VertexId& a,
                        const VertexId& b) -> const ViolationCertificate* {
        for (const auto& cert : certs) {
            if ((cert.edge.first == a && cert.edge.second == b) ||
                (cert.edge.first == b && cert.edge.second == a))
                return &cert;
        }
        return nullptr;
    };

    report["violations"] = nlohmann::json::array();
    report["boundary_edges"] = nlohmann::json::array();
    for (const auto& ec : verdict.edges) {
        const auto& rec = g.edge(ec.edge_index);
        if (ec.boundary)
            report["boundary_edges"].push_back(
                {g.label(rec.u), g.label(rec.v)});
        if (ec.pass) continue;
        nlohmann::json entry = {{"edge", {g.label(rec.u), g.label(rec.v)}},
                                {"w", ec.w.lexeme()},
                                {"d", ec.d.lexeme()}};
        if (const auto* cert = cert_for(g.label(rec.u), g.label(rec.v))) {
            entry["cycle"] = cert->cycle;
            entry["rhs"] = cert->rhs.lexeme();
        } else {
            entry["cycle"] = nlohmann::json::array();
            entry["rhs"] = nullptr;
        }
        report["violations"].push_back(std::move(entry));
    }
    return report;
}

}  // namespace phimet

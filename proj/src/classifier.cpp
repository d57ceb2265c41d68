#include "zk/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "zk/errors.hpp"
#include "zk/parallel.hpp"

namespace zk {

namespace {

bool is_sphere_profile(const HomologyProfile& h, int dim) {
    return h.torsion_free() && h.total_rank() == 1 && h.betti(dim) == 1;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// Subsets in external labels, e.g. "{1,3}".
std::string labelled(const SimplicialComplex& k, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        out += (first ? "" : ",") + std::to_string(k.labels()[static_cast<std::size_t>(v)]);
        first = false;
    });
    return out + "}";
}

class Stopwatch {
public:
    explicit Stopwatch(std::vector<StageTiming>& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
    void lap(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        sink_.push_back({stage, std::chrono::duration<double>(now - start_).count()});
        start_ = now;
    }

private:
    std::vector<StageTiming>& sink_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

HypothesisReport verify_hypotheses(const SimplicialComplex& k) {
    HypothesisReport r;
    r.m = k.vertex_count();
    r.sphere_dim = k.dim();
    r.caveats.push_back(kScreeningCaveat);

    const int d = r.sphere_dim;
    r.pure_pseudomanifold = d >= 0 && k.is_pure_pseudomanifold(d);
    if (!r.pure_pseudomanifold) r.failures.push_back("NotPseudomanifold: K is not a pure " + std::to_string(d) +
                                                     "-dimensional pseudomanifold");

    r.homology = reduced_homology(k);
    r.homology_sphere = is_sphere_profile(r.homology, d);
    if (!r.homology_sphere) {
        r.failures.push_back("NotHomologySphere: reduced homology " + r.homology.to_string() + ", expected H" +
                             std::to_string(d) + "=Z");
    }

    const std::vector<HomologyProfile> links = parallel_map<HomologyProfile>(
        static_cast<std::size_t>(r.m), [&](std::size_t v) { return reduced_homology(k.link(static_cast<int>(v))); });
    for (int v = 0; v < r.m; ++v)
        if (!is_sphere_profile(links[static_cast<std::size_t>(v)], d - 1))
            r.bad_links.push_back(k.labels()[static_cast<std::size_t>(v)]);
    r.links_homology_spheres = r.bad_links.empty();
    if (!r.links_homology_spheres) {
        std::vector<std::string> names;
        for (int v : r.bad_links) names.push_back(std::to_string(v));
        r.failures.push_back("LinkNotHomologySphere: vertices " + join(names, ","));
    }

    r.neighbourliness = k.max_neighbourliness();
    if (d >= 1 && d % 2 == 1) {
        r.n = (d - 1) / 2;
        r.neighbourly_enough = r.neighbourliness >= *r.n;
        if (!r.neighbourly_enough) {
            r.failures.push_back("InsufficientNeighbourliness: l=" + std::to_string(r.neighbourliness) +
                                 " < n=" + std::to_string(*r.n));
        }
    } else {
        r.failures.push_back(std::string("EvenSphereDimension: ") + kEvenDimensionCaveat);
        r.caveats.push_back(kEvenDimensionCaveat);
    }
    return r;
}

bool is_canonical_side(VertexSet subset, int m) {
    const int size = subset.size();
    if (2 * size != m) return 2 * size < m;
    return subset < subset.complement_in(m);
}

PairingContext::PairingContext(const SimplicialComplex& k, int disc_k, int n)
    : complex_(&k), disc_k_(disc_k), n_(n), algebra_(k, disc_k), top_(algebra_.top_form()) {}

PairingBlock PairingContext::block(VertexSet subset) const {
    const int m = complex_->vertex_count();
    PairingBlock b;
    b.left = is_canonical_side(subset, m) ? subset : subset.complement_in(m);
    b.right = b.left.complement_in(m);
    b.p = n_ + 1 + (disc_k_ - 1) * b.left.size();
    b.q = n_ + 1 + (disc_k_ - 1) * b.right.size();

    const std::vector<CochainClass> x = algebra_.cocycle_basis(b.left, b.p);
    const std::vector<CochainClass> xbar = algebra_.cocycle_basis(b.right, b.q);
    b.rank_left = static_cast<long>(x.size());
    b.rank_right = static_cast<long>(xbar.size());
    if (b.rank_left != b.rank_right) {
        throw RankMismatch("pair " + labelled(*complex_, b.left) + "/" + labelled(*complex_, b.right) +
                           " has ranks " + std::to_string(b.rank_left) + " and " + std::to_string(b.rank_right));
    }

    b.matrix = IntegerMatrix(x.size(), xbar.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < xbar.size(); ++j)
            b.matrix(i, j) = top_.evaluate(algebra_.cup(x[i], xbar[j]).product);
    b.abs_det = abs(determinant(b.matrix));
    b.unimodular = b.abs_det == 1;
    return b;
}

PairingBlock pairing_block(const SimplicialComplex& k, VertexSet subset, int disc_k) {
    const HypothesisReport h = verify_hypotheses(k);
    if (!h.passed()) throw HypothesesNotVerified(join(h.failures, "; "));
    return PairingContext(k, disc_k, *h.n).block(subset);
}

std::vector<long> ConnectedSumDecomposition::betti() const {
    std::vector<long> out(static_cast<std::size_t>(dimension + 1), 0);
    out[0] += 1;
    out[static_cast<std::size_t>(dimension)] += 1;
    for (const SphereProductFactor& f : factors) {
        out[static_cast<std::size_t>(f.p)] += f.count;
        out[static_cast<std::size_t>(f.q)] += f.count;
    }
    return out;
}

std::string ConnectedSumDecomposition::to_string() const {
    if (factors.empty()) return "S^" + std::to_string(dimension);
    std::vector<std::string> terms;
    for (const SphereProductFactor& f : factors) {
        terms.push_back("#" + std::to_string(f.count) + " (S^" + std::to_string(f.p) + " x S^" +
                        std::to_string(f.q) + ")");
    }
    return join(terms, " # ");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::HypothesesFailed: return "hypotheses-failed";
        case Verdict::WedgeHypothesisFailed: return "wedge-hypothesis-failed";
        case Verdict::RankMismatch: return "rank-mismatch";
        case Verdict::NonUnimodular: return "non-unimodular";
    }
    return "unknown";
}

Classification classify(const SimplicialComplex& k, int disc_k) {
    if (disc_k < 2) throw BadParameters("disc dimension k must be at least 2");
    Classification c;
    Stopwatch clock(c.timings);

    c.hypotheses = verify_hypotheses(k);
    clock.lap("hypotheses");
    if (!c.hypotheses.passed()) {
        c.verdict = Verdict::HypothesesFailed;
        c.diagnostic = join(c.hypotheses.failures, "; ");
        return c;
    }
    const int n = *c.hypotheses.n;
    const int m = k.vertex_count();

    const SubsetHomology homology(k);
    c.wedge = check_wedge_hypothesis(homology, n, disc_k);
    c.table = wedge_summands(homology, disc_k, false);
    clock.lap("hochster");
    if (!c.wedge->passed) {
        c.verdict = Verdict::WedgeHypothesisFailed;
        std::vector<std::string> parts;
        for (const WedgeOffender& o : c.wedge->offenders)
            parts.push_back("I=" + labelled(k, o.subset) + " (" + o.profile.to_string() + "): " + o.reason);
        c.diagnostic = "TheoremHypothesisViolated: " + join(parts, "; ");
        return c;
    }

    // Canonical representatives of contributing complementary pairs.
    std::map<VertexSet, long> rank;
    for (const WedgeSummand& s : c.table->summands) rank[s.subset] += s.multiplicity;
    std::vector<VertexSet> reps;
    for (const auto& [subset, r] : rank) {
        const VertexSet rep = is_canonical_side(subset, m) ? subset : subset.complement_in(m);
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::string> mismatched;
    for (VertexSet rep : reps) {
        const VertexSet other = rep.complement_in(m);
        const long left = rank.contains(rep) ? rank[rep] : 0;
        const long right = rank.contains(other) ? rank[other] : 0;
        if (left != right) {
            mismatched.push_back(labelled(k, rep) + "/" + labelled(k, other) + " ranks " + std::to_string(left) +
                                 " vs " + std::to_string(right));
        }
    }
    if (!mismatched.empty()) {
        c.verdict = Verdict::RankMismatch;
        c.diagnostic = "RankMismatch: " + join(mismatched, "; ");
        return c;
    }

    const PairingContext context(k, disc_k, n);
    c.blocks = parallel_map<PairingBlock>(reps.size(), [&](std::size_t i) { return context.block(reps[i]); });
    clock.lap("pairing");

    ConnectedSumDecomposition d;
    d.n = n;
    d.disc_k = disc_k;
    d.dimension = 2 * n + m * (disc_k - 1) + 2;
    std::map<std::pair<int, int>, long> merged;
    std::vector<std::string> bad;
    for (const PairingBlock& b : c.blocks) {
        merged[{b.p, b.q}] += b.rank_left;
        if (!b.unimodular)
            bad.push_back(labelled(k, b.left) + "/" + labelled(k, b.right) + " |det|=" + b.abs_det.get_str());
    }
    for (const auto& [pq, count] : merged) d.factors.push_back({pq.first, pq.second, count});
    c.decomposition = d;

    if (!bad.empty()) {
        c.verdict = Verdict::NonUnimodular;
        c.diagnostic = "NonUnimodularPairing: " + join(bad, "; ");
        return c;
    }
    c.verdict = Verdict::Certified;
    return c;
}

ConnectedSumDecomposition connected_sum(const SimplicialComplex& k, int disc_k) {
    Classification c = classify(k, disc_k);
    switch (c.verdict) {
        case Verdict::Certified: return *c.decomposition;
        case Verdict::HypothesesFailed: throw HypothesesNotVerified(c.diagnostic);
        case Verdict::WedgeHypothesisFailed: throw TheoremHypothesisViolated(c.diagnostic);
        case Verdict::RankMismatch: throw RankMismatch(c.diagnostic);
        case Verdict::NonUnimodular: throw NonUnimodularPairing(c.diagnostic);
    }
    throw Error("classifier", "unreachable verdict");
}

CrossCheckReport cross_check(const ConnectedSumDecomposition& decomposition, const DecompositionTable& table) {
    CrossCheckReport r;
    const int top = decomposition.dimension;
    std::vector<long> from_table(static_cast<std::size_t>(top + 1), 0);
    from_table[0] += 1;
    from_table[static_cast<std::size_t>(top)] += 1;
    bool in_range = true;
    for (const WedgeSummand& s : table.summands) {
        if (s.sphere_dim < 0 || s.sphere_dim > top) {
            in_range = false;
            continue;
        }
        from_table[static_cast<std::size_t>(s.sphere_dim)] += s.multiplicity;
    }
    const std::vector<long> betti = decomposition.betti();
    r.betti_match = in_range && betti == from_table;

    r.duality_symmetric = true;
    for (int t = 0; t <= top; ++t)
        if (betti[static_cast<std::size_t>(t)] != betti[static_cast<std::size_t>(top - t)]) r.duality_symmetric = false;

    long euler = 0;
    for (int t = 0; t <= top; ++t) euler += (t % 2 == 0 ? 1 : -1) * betti[static_cast<std::size_t>(t)];
    r.euler_ok = top % 2 == 0 || euler == 0;

    r.skeleton_spheres = table.sphere_count();
    for (const SphereProductFactor& f : decomposition.factors) r.factor_spheres += 2 * f.count;
    r.sphere_count_match = r.skeleton_spheres == r.factor_spheres;
    return r;
}

OracleComparison compare_oracles(const SimplicialComplex& k, int disc_k) {
    OracleComparison out;
    out.disc_k = disc_k;
    out.hochster_betti = zk_betti(k, disc_k);

    const KoszulAlgebra algebra(k, disc_k);
    const RingCohomology ring = algebra.cohomology();
    out.koszul_betti = ring.betti;

    std::vector<std::vector<ComponentMismatch>> per = parallel_map<std::vector<ComponentMismatch>>(
        ring.components.size(), [&](std::size_t i) {
            const ComponentCohomology& c = ring.components[i];
            const HomologyProfile h = reduced_homology(k.full_subcomplex(c.multidegree));
            const int shift = (disc_k - 1) * c.multidegree.size() + 1;
            std::vector<ComponentMismatch> found;
            const int last = std::max(c.last_degree(), h.top_degree() + shift);
            for (int t = c.first_degree - 1; t <= last; ++t) {
                const int j = t - shift;
                // Cohomology torsion in degree j is homology torsion in degree j-1.
                if (c.rank_at(t) != h.betti(j) || c.torsion_at(t) != h.torsion(j - 1))
                    found.push_back({c.multidegree, t, c.rank_at(t), h.betti(j)});
            }
            return found;
        });
    for (auto& f : per) out.mismatches.insert(out.mismatches.end(), f.begin(), f.end());
    return out;
}

}  // namespace zk

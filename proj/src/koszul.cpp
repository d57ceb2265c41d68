#include "zk/koszul.hpp"

#include <algorithm>

#include "zk/errors.hpp"
#include "zk/homology.hpp"
#include "zk/parallel.hpp"
#include "zk/smith.hpp"

namespace zk {

bool CochainClass::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& c) { return c == 0; });
}

CochainClass CochainClass::operator-() const {
    CochainClass out = *this;
    for (BigInt& c : out.coefficients) c = -c;
    return out;
}

long ComponentCohomology::rank_at(int t) const {
    const int i = t - first_degree;
    return (i >= 0 && i < static_cast<int>(free_rank.size())) ? free_rank[static_cast<std::size_t>(i)] : 0;
}

const std::vector<BigInt>& ComponentCohomology::torsion_at(int t) const {
    static const std::vector<BigInt> kNone;
    const int i = t - first_degree;
    return (i >= 0 && i < static_cast<int>(torsion.size())) ? torsion[static_cast<std::size_t>(i)] : kNone;
}

BigInt TopForm::evaluate(const CochainClass& c) const {
    if (c.degree != degree_ || c.multidegree != multidegree_) {
        throw NotTopDegree("class of degree " + std::to_string(c.degree) + " in multidegree " +
                           c.multidegree.to_string() + " is not top-dimensional");
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < c.coefficients.size() && i < functional_.size(); ++i)
        total += functional_[i] * c.coefficients[i];
    return total;
}

int reorder_sign(const std::vector<bool>& is_v, const std::vector<int>& vertex, int disc_k) {
    const bool u_odd = (disc_k - 1) % 2 != 0;
    const bool v_odd = disc_k % 2 != 0;
    auto key = [&](std::size_t i) { return std::pair{is_v[i] ? 1 : 0, vertex[i]}; };
    auto odd = [&](std::size_t i) { return is_v[i] ? v_odd : u_odd; };
    int sign = 1;
    for (std::size_t i = 0; i < vertex.size(); ++i)
        for (std::size_t j = i + 1; j < vertex.size(); ++j)
            if (key(j) < key(i) && odd(i) && odd(j)) sign = -sign;
    return sign;
}

namespace {

void append_word(const KoszulMonomial& mono, std::vector<bool>& is_v, std::vector<int>& vertex) {
    mono.sigma.for_each([&](int v) {
        is_v.push_back(false);
        vertex.push_back(v);
    });
    mono.tau.for_each([&](int v) {
        is_v.push_back(true);
        vertex.push_back(v);
    });
}

}  // namespace

KoszulAlgebra::KoszulAlgebra(const SimplicialComplex& k, int disc_k) : complex_(&k), disc_k_(disc_k) {
    if (disc_k < 2) throw BadParameters("disc dimension k must be at least 2");
}

std::vector<std::vector<VertexSet>> KoszulAlgebra::faces_within(VertexSet multidegree) const {
    std::vector<std::vector<VertexSet>> out;
    for (int s = 0; s <= multidegree.size(); ++s) {
        std::vector<VertexSet> level;
        for_each_k_subset(multidegree, s, [&](VertexSet tau) {
            if (complex_->is_face(tau)) level.push_back(tau);
        });
        if (level.empty()) break;
        out.push_back(std::move(level));
    }
    return out;
}

std::vector<KoszulMonomial> KoszulAlgebra::basis(VertexSet multidegree, int t) const {
    const int s = t - (disc_k_ - 1) * multidegree.size();
    std::vector<KoszulMonomial> out;
    if (s < 0 || s > multidegree.size()) return out;
    for_each_k_subset(multidegree, s, [&](VertexSet tau) {
        if (complex_->is_face(tau)) out.push_back({multidegree - tau, tau});
    });
    return out;
}

std::size_t KoszulAlgebra::index_of(const std::vector<KoszulMonomial>& basis, const KoszulMonomial& mono) const {
    const auto it = std::lower_bound(basis.begin(), basis.end(), mono,
                                     [](const KoszulMonomial& a, const KoszulMonomial& b) { return a.tau < b.tau; });
    if (it == basis.end() || !(*it == mono)) throw Error("koszul", "monomial missing from basis");
    return static_cast<std::size_t>(it - basis.begin());
}

CochainClass KoszulAlgebra::unit() const { return {0, VertexSet{}, {BigInt(1)}}; }

CochainClass KoszulAlgebra::monomial(const KoszulMonomial& mono, long coefficient) const {
    CochainClass c;
    c.degree = mono.degree(disc_k_);
    c.multidegree = mono.multidegree();
    const std::vector<KoszulMonomial> b = basis(c.multidegree, c.degree);
    c.coefficients.assign(b.size(), 0);
    c.coefficients[index_of(b, mono)] = coefficient;
    return c;
}

std::vector<std::pair<int, KoszulMonomial>> KoszulAlgebra::differential(const KoszulMonomial& mono) const {
    std::vector<std::pair<int, KoszulMonomial>> out;
    const std::vector<int> us = mono.sigma.indices();
    const std::vector<int> vs = mono.tau.indices();
    for (std::size_t l = 0; l < us.size(); ++l) {
        const int a = us[l];
        const VertexSet tau = mono.tau | VertexSet::singleton(a);
        if (!complex_->is_face(tau)) continue;
        // Leibniz: d hits position l after passing l generators of degree k-1.
        const int leibniz = ((disc_k_ - 1) * static_cast<int>(l)) % 2 == 0 ? 1 : -1;
        std::vector<bool> is_v;
        std::vector<int> word;
        for (std::size_t i = 0; i < us.size(); ++i) {
            is_v.push_back(i == l);
            word.push_back(us[i]);
        }
        for (int v : vs) {
            is_v.push_back(true);
            word.push_back(v);
        }
        out.emplace_back(leibniz * reorder_sign(is_v, word, disc_k_),
                         KoszulMonomial{mono.sigma - VertexSet::singleton(a), tau});
    }
    return out;
}

IntegerMatrix KoszulAlgebra::differential_matrix(VertexSet multidegree, int t) const {
    const std::vector<KoszulMonomial> source = basis(multidegree, t);
    const std::vector<KoszulMonomial> target = basis(multidegree, t + 1);
    IntegerMatrix d(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [sign, mono] : differential(source[c])) d(index_of(target, mono), c) += sign;
    return d;
}

CochainClass KoszulAlgebra::differential(const CochainClass& c) const {
    const std::vector<KoszulMonomial> source = basis(c.multidegree, c.degree);
    const std::vector<KoszulMonomial> target = basis(c.multidegree, c.degree + 1);
    CochainClass out{c.degree + 1, c.multidegree, std::vector<BigInt>(target.size(), 0)};
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
        if (c.coefficients[i] == 0) continue;
        for (const auto& [sign, mono] : differential(source[i]))
            out.coefficients[index_of(target, mono)] += sign * c.coefficients[i];
    }
    return out;
}

std::pair<int, KoszulMonomial> KoszulAlgebra::multiply(const KoszulMonomial& a, const KoszulMonomial& b) const {
    if (a.multidegree().intersects(b.multidegree())) return {0, {}};
    const KoszulMonomial product{a.sigma | b.sigma, a.tau | b.tau};
    if (!complex_->is_face(product.tau)) return {0, {}};
    std::vector<bool> is_v;
    std::vector<int> word;
    append_word(a, is_v, word);
    append_word(b, is_v, word);
    return {reorder_sign(is_v, word, disc_k_), product};
}

CupResult KoszulAlgebra::cup(const CochainClass& a, const CochainClass& b) const {
    CupResult result;
    result.product.degree = a.degree + b.degree;
    result.product.multidegree = a.multidegree | b.multidegree;
    if (a.multidegree.intersects(b.multidegree)) {
        result.multidegree_overlap = true;
        return result;
    }
    const std::vector<KoszulMonomial> left = basis(a.multidegree, a.degree);
    const std::vector<KoszulMonomial> right = basis(b.multidegree, b.degree);
    const std::vector<KoszulMonomial> target = basis(result.product.multidegree, result.product.degree);
    result.product.coefficients.assign(target.size(), 0);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        if (a.coefficients[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
            if (b.coefficients[j] == 0) continue;
            const auto [sign, mono] = multiply(left[i], right[j]);
            if (sign == 0) continue;
            result.product.coefficients[index_of(target, mono)] += sign * a.coefficients[i] * b.coefficients[j];
        }
    }
    return result;
}

ComponentCohomology KoszulAlgebra::component_cohomology(VertexSet multidegree) const {
    ComponentCohomology out;
    out.multidegree = multidegree;
    out.first_degree = (disc_k_ - 1) * multidegree.size();
    const std::size_t levels = faces_within(multidegree).size();

    // ranks[s] = rank of d: C^{t_s} -> C^{t_s + 1}; smith[s] kept for torsion.
    std::vector<SmithForm> smith;
    std::vector<std::size_t> dims;
    for (std::size_t s = 0; s < levels; ++s) {
        const int t = out.first_degree + static_cast<int>(s);
        dims.push_back(basis(multidegree, t).size());
        smith.push_back(smith_normal_form(SparseIntegerMatrix::from_dense(differential_matrix(multidegree, t))));
    }
    for (std::size_t s = 0; s < levels; ++s) {
        const long in_rank = s > 0 ? static_cast<long>(smith[s - 1].rank()) : 0;
        out.free_rank.push_back(static_cast<long>(dims[s]) - static_cast<long>(smith[s].rank()) - in_rank);
        out.torsion.push_back(s > 0 ? smith[s - 1].torsion() : std::vector<BigInt>{});
    }
    return out;
}

RingCohomology KoszulAlgebra::cohomology() const {
    std::vector<VertexSet> subsets;
    const VertexSet all = complex_->vertices();
    for (int size = 0; size <= all.size(); ++size)
        for_each_k_subset(all, size, [&](VertexSet s) { subsets.push_back(s); });

    RingCohomology out;
    out.disc_k = disc_k_;
    out.components = parallel_map<ComponentCohomology>(
        subsets.size(), [&](std::size_t i) { return component_cohomology(subsets[i]); });
    for (const ComponentCohomology& c : out.components) {
        for (int t = c.first_degree; t <= c.last_degree(); ++t) {
            if (c.rank_at(t) == 0) continue;
            if (static_cast<int>(out.betti.size()) <= t) out.betti.resize(static_cast<std::size_t>(t + 1), 0);
            out.betti[static_cast<std::size_t>(t)] += c.rank_at(t);
        }
    }
    return out;
}

std::vector<CochainClass> KoszulAlgebra::cocycle_basis(VertexSet multidegree, int t) const {
    const IntegerMatrix d_prev = differential_matrix(multidegree, t - 1);
    const IntegerMatrix d_next = differential_matrix(multidegree, t);
    const IntegerMatrix reps = cohomology_basis(d_prev, d_next);
    std::vector<CochainClass> out;
    for (std::size_t c = 0; c < reps.cols(); ++c) out.push_back({t, multidegree, reps.column(c)});
    return out;
}

int KoszulAlgebra::top_degree() const {
    return (disc_k_ - 1) * complex_->vertex_count() + complex_->dim() + 1;
}

TopForm KoszulAlgebra::top_form() const {
    const VertexSet all = complex_->vertices();
    const int top = top_degree();
    // Functionals vanishing on coboundaries: left kernel of d into the top.
    const IntegerMatrix d_in = differential_matrix(all, top - 1);
    const IntegerMatrix kernel = integer_kernel(d_in.transpose());
    const ComponentCohomology h = component_cohomology(all);
    if (kernel.cols() != 1 || h.rank_at(top) != 1 || !h.torsion_at(top).empty()) {
        throw TopRankNotOne("top component has rank " + std::to_string(kernel.cols()) + " in degree " +
                            std::to_string(top) + ", expected Z");
    }
    std::vector<BigInt> phi = kernel.column(0);
    const auto first = std::find_if(phi.begin(), phi.end(), [](const BigInt& c) { return c != 0; });
    if (first != phi.end() && *first < 0)
        for (BigInt& c : phi) c = -c;
    return TopForm(top, all, std::move(phi));
}

}  // namespace zk

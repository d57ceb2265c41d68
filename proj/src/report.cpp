#include "zk/report.hpp"

#include <iomanip>
#include <sstream>

#include "zk/errors.hpp"
#include "zk/io.hpp"

namespace zk {

namespace {

std::vector<int> labels_of(const SimplicialComplex& k, VertexSet s) {
    std::vector<int> out;
    s.for_each([&](int v) { out.push_back(k.labels()[static_cast<std::size_t>(v)]); });
    return out;
}

std::string set_text(const std::vector<int>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
    return out + "}";
}

std::string vector_text(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("report is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("report field \"") + key + "\": " + e.what());
    }
}

const nlohmann::json& section(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("report is missing \"") + key + "\"");
    return j.at(key);
}

}  // namespace

bool Report::operator==(const Report& o) const {
    auto same_timings = [](const std::vector<StageTiming>& a, const std::vector<StageTiming>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].stage != b[i].stage || a[i].seconds != b[i].seconds) return false;
        return true;
    };
    return name == o.name && m == o.m && facet_count == o.facet_count && content_hash == o.content_hash &&
           disc_k == o.disc_k && sphere_dim == o.sphere_dim && n == o.n &&
           pure_pseudomanifold == o.pure_pseudomanifold && homology_sphere == o.homology_sphere &&
           links_homology_spheres == o.links_homology_spheres && neighbourliness == o.neighbourliness &&
           neighbourly_enough == o.neighbourly_enough && homology == o.homology && failures == o.failures &&
           caveats == o.caveats && summands == o.summands && sphere_count == o.sphere_count && betti == o.betti &&
           pairs == o.pairs && verdict == o.verdict && certified == o.certified && dimension == o.dimension &&
           connected_sum == o.connected_sum && diagnostic == o.diagnostic && oracle == o.oracle &&
           same_timings(timings, o.timings);
}

Report make_report(const std::string& name, const SimplicialComplex& k, int disc_k, const Classification& c,
                   const std::vector<long>& betti, const std::optional<OracleComparison>& oracle) {
    Report r;
    r.name = name;
    r.m = k.vertex_count();
    r.facet_count = static_cast<long>(k.facets().size());
    r.content_hash = content_hash(k);
    r.disc_k = disc_k;

    const HypothesisReport& h = c.hypotheses;
    r.sphere_dim = h.sphere_dim;
    r.n = h.n;
    r.pure_pseudomanifold = h.pure_pseudomanifold;
    r.homology_sphere = h.homology_sphere;
    r.links_homology_spheres = h.links_homology_spheres;
    r.neighbourliness = h.neighbourliness;
    r.neighbourly_enough = h.neighbourly_enough;
    r.homology = h.homology.to_string();
    r.failures = h.failures;
    r.caveats = h.caveats;

    if (c.table) {
        for (const WedgeSummand& s : c.table->summands)
            r.summands.push_back({labels_of(k, s.subset), s.degree, s.sphere_dim, s.multiplicity});
        r.sphere_count = c.table->sphere_count();
    }
    r.betti = betti;
    for (const PairingBlock& b : c.blocks) {
        r.pairs.push_back({labels_of(k, b.left), labels_of(k, b.right), b.rank_left, b.rank_right,
                           b.abs_det.get_str(), b.unimodular, b.p, b.q});
    }

    r.verdict = verdict_name(c.verdict);
    r.certified = c.verdict == Verdict::Certified;
    if (c.decomposition) {
        r.dimension = c.decomposition->dimension;
        r.connected_sum = c.decomposition->to_string();
    }
    r.diagnostic = c.diagnostic;
    if (oracle) {
        r.oracle = OracleRow{oracle->agree(), oracle->hochster_betti, oracle->koszul_betti,
                             static_cast<long>(oracle->mismatches.size())};
    }
    r.timings = c.timings;
    return r;
}

nlohmann::json to_json(const Report& r) {
    using nlohmann::json;
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["input"] = {{"name", r.name}, {"m", r.m}, {"facet_count", r.facet_count}, {"content_hash", r.content_hash}};
    j["disc_k"] = r.disc_k;
    j["hypotheses"] = {{"sphere_dim", r.sphere_dim},
                       {"n", r.n ? json(*r.n) : json(nullptr)},
                       {"pure_pseudomanifold", r.pure_pseudomanifold},
                       {"homology_sphere", r.homology_sphere},
                       {"links_homology_spheres", r.links_homology_spheres},
                       {"neighbourliness", r.neighbourliness},
                       {"neighbourly_enough", r.neighbourly_enough},
                       {"homology", r.homology},
                       {"failures", r.failures},
                       {"caveats", r.caveats}};
    json summands = json::array();
    for (const SummandRow& s : r.summands) {
        summands.push_back({{"subset", s.subset},
                            {"degree", s.degree},
                            {"sphere_dim", s.sphere_dim},
                            {"multiplicity", s.multiplicity}});
    }
    j["table"] = {{"summands", summands}, {"sphere_count", r.sphere_count}};
    j["betti"] = r.betti;
    json pairs = json::array();
    for (const PairRow& p : r.pairs) {
        pairs.push_back({{"left", p.left},
                         {"right", p.right},
                         {"rank_left", p.rank_left},
                         {"rank_right", p.rank_right},
                         {"abs_det", p.abs_det},
                         {"unimodular", p.unimodular},
                         {"p", p.p},
                         {"q", p.q}});
    }
    j["pairs"] = pairs;
    j["verdict"] = r.verdict;
    j["certified"] = r.certified;
    j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
    j["connected_sum"] = r.connected_sum;
    j["diagnostic"] = r.diagnostic;
    if (r.oracle) {
        j["oracle"] = {{"agree", r.oracle->agree},
                       {"hochster_betti", r.oracle->hochster_betti},
                       {"koszul_betti", r.oracle->koszul_betti},
                       {"mismatches", r.oracle->mismatches}};
    } else {
        j["oracle"] = nullptr;
    }
    json timings = json::array();
    for (const StageTiming& t : r.timings) timings.push_back({{"stage", t.stage}, {"seconds", t.seconds}});
    j["timings"] = timings;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("report must be a JSON object");
    const int version = field<int>(j, "schema_version");
    if (version != kReportSchemaVersion) throw SchemaError("unsupported report schema version " + std::to_string(version));

    Report r;
    const auto& input = section(j, "input");
    r.name = field<std::string>(input, "name");
    r.m = field<int>(input, "m");
    r.facet_count = field<long>(input, "facet_count");
    r.content_hash = field<std::string>(input, "content_hash");
    r.disc_k = field<int>(j, "disc_k");

    const auto& h = section(j, "hypotheses");
    r.sphere_dim = field<int>(h, "sphere_dim");
    if (!section(h, "n").is_null()) r.n = field<int>(h, "n");
    r.pure_pseudomanifold = field<bool>(h, "pure_pseudomanifold");
    r.homology_sphere = field<bool>(h, "homology_sphere");
    r.links_homology_spheres = field<bool>(h, "links_homology_spheres");
    r.neighbourliness = field<int>(h, "neighbourliness");
    r.neighbourly_enough = field<bool>(h, "neighbourly_enough");
    r.homology = field<std::string>(h, "homology");
    r.failures = field<std::vector<std::string>>(h, "failures");
    r.caveats = field<std::vector<std::string>>(h, "caveats");

    const auto& table = section(j, "table");
    for (const auto& s : section(table, "summands")) {
        r.summands.push_back({field<std::vector<int>>(s, "subset"), field<int>(s, "degree"),
                              field<int>(s, "sphere_dim"), field<long>(s, "multiplicity")});
    }
    r.sphere_count = field<long>(table, "sphere_count");
    r.betti = field<std::vector<long>>(j, "betti");
    for (const auto& p : section(j, "pairs")) {
        r.pairs.push_back({field<std::vector<int>>(p, "left"), field<std::vector<int>>(p, "right"),
                           field<long>(p, "rank_left"), field<long>(p, "rank_right"),
                           field<std::string>(p, "abs_det"), field<bool>(p, "unimodular"), field<int>(p, "p"),
                           field<int>(p, "q")});
    }
    r.verdict = field<std::string>(j, "verdict");
    r.certified = field<bool>(j, "certified");
    if (!section(j, "dimension").is_null()) r.dimension = field<int>(j, "dimension");
    r.connected_sum = field<std::string>(j, "connected_sum");
    r.diagnostic = field<std::string>(j, "diagnostic");
    if (!section(j, "oracle").is_null()) {
        const auto& o = section(j, "oracle");
        r.oracle = OracleRow{field<bool>(o, "agree"), field<std::vector<long>>(o, "hochster_betti"),
                             field<std::vector<long>>(o, "koszul_betti"), field<long>(o, "mismatches")};
    }
    for (const auto& t : section(j, "timings")) r.timings.push_back({field<std::string>(t, "stage"), field<double>(t, "seconds")});
    return r;
}

std::string render_hypotheses(const Report& r) {
    std::ostringstream out;
    out << "input: " << r.name << " (m=" << r.m << ", facets=" << r.facet_count << ", hash=" << r.content_hash
        << ")\n";
    out << "sphere dimension: " << r.sphere_dim;
    if (r.n) out << " (n=" << *r.n << ")";
    out << "\n";
    out << "reduced homology: " << r.homology << "\n";
    out << "pure pseudomanifold: " << yes_no(r.pure_pseudomanifold) << "\n";
    out << "homology sphere: " << yes_no(r.homology_sphere) << "\n";
    out << "vertex links homology spheres: " << yes_no(r.links_homology_spheres) << "\n";
    out << "neighbourliness: " << r.neighbourliness;
    if (r.n) out << " (need >= " << *r.n << ": " << yes_no(r.neighbourly_enough) << ")";
    out << "\n";
    for (const std::string& f : r.failures) out << "failed: " << f << "\n";
    for (const std::string& c : r.caveats) out << "caveat: " << c << "\n";
    out << "hypotheses: " << (r.failures.empty() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string render_text(const Report& r, bool timings) {
    std::ostringstream out;
    out << render_hypotheses(r);
    out << "disc k: " << r.disc_k << "\n";
    if (!r.betti.empty()) out << "betti: " << vector_text(r.betti) << "\n";
    if (!r.summands.empty() || r.sphere_count > 0) {
        out << "punctured skeleton: " << r.sphere_count << " spheres\n";
        for (const SummandRow& s : r.summands) {
            out << "  I=" << set_text(s.subset) << " H" << s.degree << " -> " << s.multiplicity << " x S^"
                << s.sphere_dim << "\n";
        }
    }
    if (!r.pairs.empty()) {
        out << "pairings:\n";
        for (const PairRow& p : r.pairs) {
            out << "  " << set_text(p.left) << " | " << set_text(p.right) << "  " << p.rank_left << "x"
                << p.rank_right << "  |det|=" << p.abs_det << "  S^" << p.p << " x S^" << p.q
                << (p.unimodular ? "" : "  (not unimodular)") << "\n";
        }
    }
    if (r.oracle) {
        out << "oracle: " << (r.oracle->agree ? "agree" : "DISAGREE") << " (hochster " << vector_text(r.oracle->hochster_betti)
            << "; koszul " << vector_text(r.oracle->koszul_betti) << ")\n";
    }
    out << "verdict: " << r.verdict << "\n";
    if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << "\n";
    if (r.dimension) {
        out << "dim " << *r.dimension << "\n";
        out << (r.certified ? "" : "non-certified: ") << r.connected_sum << "\n";
    }
    if (timings) {
        for (const StageTiming& t : r.timings)
            out << "time " << t.stage << ": " << std::fixed << std::setprecision(6) << t.seconds << " s\n";
    }
    return out.str();
}

}  // namespace zk

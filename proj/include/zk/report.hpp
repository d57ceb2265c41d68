#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zk/classifier.hpp"

namespace zk {

inline constexpr int kReportSchemaVersion = 1;

struct SummandRow {
    std::vector<int> subset;  // 1-based labels
    int degree = 0;
    int sphere_dim = 0;
    long multiplicity = 0;
    friend bool operator==(const SummandRow&, const SummandRow&) = default;
};

struct PairRow {
    std::vector<int> left;
    std::vector<int> right;
    long rank_left = 0;
    long rank_right = 0;
    std::string abs_det;  // decimal, arbitrary precision
    bool unimodular = false;
    int p = 0;
    int q = 0;
    friend bool operator==(const PairRow&, const PairRow&) = default;
};

struct OracleRow {
    bool agree = false;
    std::vector<long> hochster_betti;
    std::vector<long> koszul_betti;
    long mismatches = 0;
    friend bool operator==(const OracleRow&, const OracleRow&) = default;
};

struct Report {
    std::string name;
    int m = 0;
    long facet_count = 0;
    std::string content_hash;
    int disc_k = 2;

    int sphere_dim = -1;
    std::optional<int> n;
    bool pure_pseudomanifold = false;
    bool homology_sphere = false;
    bool links_homology_spheres = false;
    int neighbourliness = -1;
    bool neighbourly_enough = false;
    std::string homology;
    std::vector<std::string> failures;
    std::vector<std::string> caveats;

    std::vector<SummandRow> summands;
    long sphere_count = 0;
    std::vector<long> betti;
    std::vector<PairRow> pairs;

    std::string verdict;
    bool certified = false;
    std::optional<int> dimension;
    std::string connected_sum;
    std::string diagnostic;
    std::optional<OracleRow> oracle;
    std::vector<StageTiming> timings;

    bool operator==(const Report& o) const;
};

Report make_report(const std::string& name, const SimplicialComplex& k, int disc_k, const Classification& c,
                   const std::vector<long>& betti, const std::optional<OracleComparison>& oracle);

nlohmann::json to_json(const Report& r);
/// Throws SchemaError on a missing field or unknown schema version.
Report report_from_json(const nlohmann::json& j);

/// Stable, diff-friendly text. Timings appear only when requested.
std::string render_text(const Report& r, bool timings);

/// Hypothesis section alone, as printed by `check`.
std::string render_hypotheses(const Report& r);

}  // namespace zk

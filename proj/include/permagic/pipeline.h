#ifndef _PERMAGIC_PIPELINE_H
#define _PERMAGIC_PIPELINE_H

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "permagic/context.h"
#include "permagic/fixtures.h"
#include "permagic/gates.h"
#include "permagic/spectra.h"
#include "permagic/wigner.h"

namespace permagic {

/// Constructions worth trying for dimension d: direct always, tensor for composite d.
std::vector<Construction> constructions_for(size_t d, const std::string &choice);

// ---- table 2 -----------------------------------------------------------------------------

struct Table2Result {
    size_t d = 0;
    std::string label;
    std::string state;
    std::string group;
    std::string construction;
    std::string expected;
    std::string computed;  // exact string, empty on error
    double computed_approx = 0;
    double mana = 0;
    bool match = false;
    std::string error;
};

struct Table2Report {
    std::vector<Table2Result> rows;
    /// d -> constructions under which every row of that dimension matched.
    std::map<size_t, std::vector<std::string>> matching_constructions;
    /// Rows (d, label) with no matching construction at all.
    std::vector<std::string> unmatched;

    bool all_matched() const {
        return unmatched.empty();
    }
};

/// construction_choice: "direct", "tensor" or "both" (tensor is skipped for prime d).
Table2Report run_table2(const Fixtures &fixtures, const std::vector<size_t> &dims,
                        const std::string &construction_choice);

// ---- classify / context --------------------------------------------------------------------

struct ContextSummary {
    size_t vertices = 0;
    size_t edges = 0;
    std::map<size_t, size_t> clique_profile;
    std::vector<Pentagon> pentagons;
    size_t all_five_cycles = 0;
    std::optional<size_t> alpha;  // empty when the budget ran out
    std::vector<WitnessReport> witnesses;
    PentagonCensus census;
};

struct ClassifyResult {
    EigenReport report;
    OrthoGraph graph;
    ContextSummary context;
};

ContextSummary analyse_context(const OrthoGraph &g);
ClassifyResult run_classify(const GateGroup &g, const ClassifyOptions &options);

// ---- phase-point properties --------------------------------------------------------------

struct PropsResult {
    size_t d = 0;
    std::string construction;
    PhasePointProperties properties;
    size_t reconstruction_trials = 0;
    size_t reconstruction_failures = 0;
    /// Trials whose Wigner values came out non-real.
    size_t nonreal_wigner = 0;
};

/// Random rays use small integer and root-of-unity amplitudes from a seeded generator.
PropsResult run_props(size_t d, Construction c, size_t trials, uint64_t seed);
CVector random_ray(size_t d, std::mt19937_64 &rng);

// ---- JSON / text exports -----------------------------------------------------------------

nlohmann::json to_json(const Table2Report &r);
nlohmann::json to_json(const EigenReport &r);
nlohmann::json to_json(const ContextSummary &c, const OrthoGraph &g);
nlohmann::json to_json(const ClassifyResult &r);
nlohmann::json to_json(const PropsResult &r);
nlohmann::json to_json(const MagicPairSearch &s);
nlohmann::json to_json(const WignerMatrix &w, const MagicMonotones &m);

std::string table2_csv(const Table2Report &r);
std::string rays_csv(const EigenReport &r);
std::string table2_text(const Table2Report &r);
std::string classify_text(const ClassifyResult &r);
std::string search_text(const MagicPairSearch &s);

}  // namespace permagic

#endif

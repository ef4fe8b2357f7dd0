#ifndef _PERMAGIC_FIXTURES_H
#define _PERMAGIC_FIXTURES_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permagic/expr.h"
#include "permagic/matrix.h"

namespace permagic {

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A printed d x d matrix: scale times rows of tokens. Tokens are looked up in the legend first
/// (so "+'" can stand for (sqrt(5)-1)/2), then parsed as expressions over the symbols.
struct PrintedMatrix {
    std::string id;
    std::string cite;
    size_t d = 0;
    std::string state_text;
    /// Parsed state (the symbols apply).
    CVector state;
    std::vector<std::vector<std::string>> tokens;
    std::map<std::string, std::string> legend;
    /// Decoded exact entries, row-major, scale applied.
    std::vector<Cyclotomic> entries;

    const Cyclotomic &at(size_t q, size_t p) const {
        return entries[q * d + p];
    }
};

struct Table1Entry {
    std::string state;
    std::string eigen_of;
    PrintedMatrix printed;
    /// False when only a numeric comparison is meaningful.
    bool exact = true;
    double tolerance = 0;
};

struct Table2Entry {
    size_t d = 0;
    std::string label;
    /// Reference-state names or amplitude vectors; several when the row has a +- choice.
    std::vector<std::string> states;
    SymbolTable symbols;
    std::string sum_text;
    Cyclotomic sum;
    std::optional<double> printed_approx;
    std::string group;
    std::string cite;
};

struct GroupFixture {
    std::string name;
    std::string paper_name;
    size_t order = 0;
    size_t d = 0;
};

struct Fixtures {
    std::string path;
    std::vector<Table1Entry> table1;
    std::vector<Table2Entry> table2;
    std::vector<PrintedMatrix> matrices;
    std::vector<GroupFixture> groups;
    /// Counts keyed by scenario (d3, d4, d5_f20, d5_s5), kept as raw JSON.
    nlohmann::json structure;

    /// Throws std::out_of_range for an unknown id.
    const PrintedMatrix &matrix(const std::string &id) const;
};

/// PERMAGIC_FIXTURES if set, otherwise data/fixtures.json in the source tree.
std::string default_fixtures_path();
/// Throws FixtureError on unreadable or malformed files.
Fixtures load_fixtures(const std::string &path);
const Fixtures &default_fixtures();

/// Parses a state given either as a reference-state name or an amplitude vector.
CVector state_vector(const std::string &text, const SymbolTable &symbols = {});

}  // namespace permagic

#endif

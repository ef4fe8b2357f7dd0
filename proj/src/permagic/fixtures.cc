#include "permagic/fixtures.h"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "permagic/spectra.h"

namespace permagic {

namespace {

SymbolTable symbols_of(const nlohmann::json &j) {
    SymbolTable out;
    if (j.contains("symbols")) {
        for (const auto &[name, text] : j.at("symbols").items()) {
            out[name] = parse_cyclotomic(text.get<std::string>());
        }
    }
    return out;
}

PrintedMatrix read_matrix(const nlohmann::json &j, size_t d, const SymbolTable &symbols) {
    PrintedMatrix m;
    m.d = d;
    m.id = j.value("id", "");
    m.cite = j.value("cite", "");
    if (j.contains("legend")) {
        m.legend = j.at("legend").get<std::map<std::string, std::string>>();
    }
    m.tokens = j.at("rows").get<std::vector<std::vector<std::string>>>();
    if (m.tokens.size() != d) {
        throw FixtureError("matrix " + m.id + ": expected " + std::to_string(d) + " rows");
    }
    Cyclotomic scale = parse_cyclotomic(j.at("scale").get<std::string>());
    for (const auto &row : m.tokens) {
        if (row.size() != d) {
            throw FixtureError("matrix " + m.id + ": ragged row");
        }
        for (const auto &tok : row) {
            auto it = m.legend.find(tok);
            const std::string &text = it == m.legend.end() ? tok : it->second;
            m.entries.push_back(parse_cyclotomic(text, symbols) * scale);
        }
    }
    return m;
}

}  // namespace

CVector state_vector(const std::string &text, const SymbolTable &symbols) {
    if (!text.empty() && (text[0] == '(' || text[0] == '[')) {
        return parse_vector(text, symbols);
    }
    ReferenceState s = reference_state(text);
    if (!s.exact) {
        throw std::invalid_argument("state '" + text + "' has no exact amplitudes");
    }
    return *s.exact;
}

const PrintedMatrix &Fixtures::matrix(const std::string &id) const {
    for (const auto &m : matrices) {
        if (m.id == id) {
            return m;
        }
    }
    throw std::out_of_range("no fixture matrix '" + id + "'");
}

std::string default_fixtures_path() {
    if (const char *env = std::getenv("PERMAGIC_FIXTURES"); env != nullptr && *env != '\0') {
        return env;
    }
    return std::string(PERMAGIC_SOURCE_DIR) + "/data/fixtures.json";
}

Fixtures load_fixtures(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FixtureError("cannot open fixtures file " + path);
    }
    Fixtures f;
    f.path = path;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.value("schema", 0) != 1) {
            throw FixtureError("unsupported fixtures schema in " + path);
        }
        for (const auto &e : j.at("table1")) {
            Table1Entry t;
            t.state = e.at("state").get<std::string>();
            t.eigen_of = e.value("eigen_of", "");
            t.printed = read_matrix(e, 2, {});
            t.printed.id = "table1_" + t.state;
            t.exact = e.value("exact", true);
            t.tolerance = e.value("tolerance", 0.0);
            f.table1.push_back(std::move(t));
        }
        for (const auto &e : j.at("table2")) {
            Table2Entry t;
            t.d = e.at("d").get<size_t>();
            t.label = e.value("label", "");
            t.states = e.at("states").get<std::vector<std::string>>();
            t.symbols = symbols_of(e);
            t.sum_text = e.at("sum").get<std::string>();
            t.sum = parse_cyclotomic(t.sum_text);
            if (!e.at("printed_approx").is_null()) {
                t.printed_approx = e.at("printed_approx").get<double>();
            }
            t.group = e.value("group", "");
            t.cite = e.value("cite", "");
            f.table2.push_back(std::move(t));
        }
        for (const auto &e : j.at("matrices")) {
            size_t d = e.at("d").get<size_t>();
            SymbolTable symbols = symbols_of(e);
            PrintedMatrix m = read_matrix(e, d, symbols);
            m.state_text = e.at("state").get<std::string>();
            m.state = parse_vector(m.state_text, symbols);
            if (m.state.size() != d) {
                throw FixtureError("matrix " + m.id + ": state has wrong dimension");
            }
            f.matrices.push_back(std::move(m));
        }
        for (const auto &e : j.at("groups")) {
            f.groups.push_back({e.at("name").get<std::string>(), e.at("paper_name").get<std::string>(),
                                e.at("order").get<size_t>(), e.at("d").get<size_t>()});
        }
        f.structure = j.at("structure");
    } catch (const nlohmann::json::exception &e) {
        throw FixtureError(path + ": " + e.what());
    } catch (const ParseError &e) {
        throw FixtureError(path + ": " + e.what());
    }
    return f;
}

const Fixtures &default_fixtures() {
    static std::once_flag once;
    static Fixtures f;
    std::call_once(once, [] { f = load_fixtures(default_fixtures_path()); });
    return f;
}

}  // namespace permagic

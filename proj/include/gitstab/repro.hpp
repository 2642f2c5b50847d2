#ifndef GITSTAB_REPRO_HPP
#define GITSTAB_REPRO_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gitstab/catalog.hpp"
#include "gitstab/json_io.hpp"

namespace gitstab::repro {

/// Provenance of an expected value: "reference" values are transcribed from
/// the source computations and must all match for a clean run; "derived"
/// values come from an independent in-repo oracle; "trivial" values are
/// forced by definitions.
struct ReproConfig {
    std::map<std::string, Rational> assignment = catalog::default_assignment();
    std::vector<Rational> beta_sweep = {Rational(2), Rational(3), Rational(5), Rational(-1)};
    std::vector<std::array<Rational, 4>> bridge_sweep = {
        {Rational(0), Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(0), Rational(1)},
        {Rational(1), Rational(2), Rational(-1), Rational(1)},
        {Rational(-2), Rational(3), Rational(1), Rational(-1)}};
    int jinv_trials = 20;
    unsigned long seed = 20240809;
    std::vector<std::string> entry_filter;  // substring match on ids; empty = all
    GroebnerConfig limits;
    int jobs = 1;
};

ReproConfig config_from_json(const Json& j);

struct EntryResult {
    std::string id;
    std::string provenance;  // reference | derived | trivial
    Json inputs;
    Json expected;
    Json computed;
    bool match = false;
    std::string note;
};

struct ReproReport {
    std::vector<EntryResult> entries;  // sorted by id
    int matched = 0;
    int mismatched = 0;
    int reference_mismatched = 0;

    Json to_json(const ReproConfig& cfg) const;
    bool clean() const { return mismatched == 0; }
};

/// Every catalog computation, re-run and compared: mu indices, verdicts,
/// golden standard-monomial lists, flat limits and basins, decompositions
/// and conic certificates, intersection profiles, Hilbert-function and
/// flatness checks, the j-invariant cross-checks, the valuation table, and
/// the parameter-independence sweeps.
ReproReport run_repro(const ReproConfig& cfg);

const std::vector<std::pair<std::string, std::string>>& entry_index();  // (id, provenance)

} // namespace gitstab::repro

#endif

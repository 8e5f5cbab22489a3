#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pqcurves/descent.hpp"
#include "pqcurves/diophantine.hpp"
#include "pqcurves/torsion.hpp"

namespace pqcurves {

// All reports are ordered JSON documents under schema version 1; field
// order is fixed so identical configurations serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const DescentReport& rep);
Json to_json(const TorsionGroup& group, const GaussianInt& a, const GaussianInt& b);
Json to_json(const VerificationReport& rep);

enum class Subcommand { Pairs, Rank, Torsion, DescentTrace, Verify, All };
enum class OutputFormat { Json, Text };

struct RunConfig {
    Subcommand subcommand = Subcommand::Pairs;
    std::optional<long> p, q;
    long limit = 100;
    long norm_bound = 400;
    long height = 50;
    long moduli_bound = 100;
    char sign = 'b';  // '+', '-' or 'b' for both families
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Json;
};

// Dispatches a configuration, writes the report to output_path or stdout.
// Exit codes: 0 every check passed / data emitted, 2 at least one FAIL
// verdict (a nontrivial solution, nonzero rank, torsion beyond Z/2Z or an
// undecided descent class), 1 usage or internal error.
int run(const RunConfig& config);

}  // namespace pqcurves

#pragma once

#include "vtxalg/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtx {

// Suite records add Classified to the checker verdicts: an outcome that
// describes the algebra (for instance nonlocality) rather than a defect.
enum class RecordVerdict { Pass, Fail, Inconclusive, Classified };
std::string to_string(RecordVerdict v);

struct SuiteRecord {
    std::string check;
    std::string identity; // the identity or property under test, in words
    std::vector<std::string> tuple;
    RecordVerdict verdict = RecordVerdict::Pass;
    std::optional<std::pair<std::string, int>> order; // ("k" or "l", value)
    bool exact_complete = true;
    std::vector<Witness> witnesses;
    std::vector<std::string> witness_basis; // names for the witness vectors
    std::string note;
    double seconds = 0;
};

struct ClosureSummary {
    std::string status;
    std::size_t dim = 0;
    std::pair<int, int> n_range{0, 0};
    std::string note;
    std::optional<AlgebraFile> algebra;
};

struct SuiteReport {
    std::string target;
    std::string suite;
    std::vector<std::pair<std::string, std::string>> options;
    std::vector<std::pair<std::string, std::string>> classification;
    std::vector<SuiteRecord> records;
    std::optional<ClosureSummary> closure;

    std::size_t count(RecordVerdict v) const;
    int exit_code() const { return count(RecordVerdict::Fail) ? 1 : 0; }
};

struct SuiteOptions {
    std::optional<int> bound;
    std::optional<int> window;
    std::string q = "auto"; // auto | from-cocycle | rational literal
    std::size_t dim_cap = 64;
    std::size_t depth_cap = 8;
    std::optional<std::pair<int, int>> n_range;
    bool local_products = false;
    // Restrict to one check id and, optionally, one basis tuple.
    std::optional<std::string> only;
    std::vector<std::string> tuple;
    unsigned threads = 0; // 0: hardware concurrency
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"axioms", "locality", "skew",  "jacobi",
                                                "modules", "jacobi-like", "closure", "all"};
    return names;
}

SuiteReport run_suite(const AlgebraFile &target, const std::string &suite,
                      const SuiteOptions &opts = {});

// Closure of the file's operator set, or of the adjoint operators when the
// file has none; the report embeds the closed structure as an algebra file.
SuiteReport run_closure(const AlgebraFile &target, const SuiteOptions &opts = {});

enum class ReportFormat { Text, Json };
// Timing is emitted only when requested so reports stay byte-identical.
std::string emit_report(const SuiteReport &r, ReportFormat fmt, bool timing = false);
std::string emit_reports(const std::vector<SuiteReport> &rs, ReportFormat fmt, bool timing = false);

} // namespace vtx

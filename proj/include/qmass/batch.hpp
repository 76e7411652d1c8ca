#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmass/identities.hpp"

namespace qmass {

struct BatchEntry {
    std::string identity;
    std::vector<std::pair<std::string, long>> params;
    int line = 0;  // 1-based source line; 0 for entries built from CLI flags
};

struct BatchSpec {
    std::vector<BatchEntry> entries;
};

class BatchParseError : public std::runtime_error {
  public:
    BatchParseError(int line, int column, const std::string& detail);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

  private:
    int line_;
    int column_;
    std::string detail_;
};

/* Line-oriented grammar: `<identity> key=value ...`, `#` comments.
 * Unknown identities, unknown or duplicate keys, non-integer values,
 * out-of-range values and missing required keys are all rejected here,
 * with the source position. */
BatchSpec parse_spec(const std::string& text);

/* Same validation applied to a single entry (used for CLI-built
 * entries); throws BatchParseError. */
void validate_entry(const BatchEntry& entry);

std::optional<long> param_value(const BatchEntry& entry, const std::string& key);

/* One verification outcome; exactly one member is set. */
struct EntryResult {
    std::optional<IdentityReport> report;
    std::optional<HallNumericReport> numeric;
    std::optional<DigitsReport> digits;

    bool ok() const {
        if (report) return report->ok();
        if (numeric) return numeric->ok();
        return true;
    }
};

/* Entry must already be valid. */
EntryResult run_entry(const BatchEntry& entry);

/* Runs entries (concurrently when jobs > 1) and returns results in
 * input order regardless of the job count. */
std::vector<EntryResult> run_batch(const BatchSpec& spec, int jobs);

}  // namespace qmass

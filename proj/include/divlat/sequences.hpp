#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divlat/big_count.hpp"
#include "divlat/invariants.hpp"
#include "divlat/parallel.hpp"
#include "divlat/signature.hpp"

namespace divlat {

enum class Ordering { Natural, GradedColex, Canonical };

std::string_view to_string(Ordering ordering);
std::optional<Ordering> parse_ordering(std::string_view text);

struct SequenceEntry {
    std::uint64_t key = 0;                    // n, or signature index
    std::optional<PrimeSignature> signature;  // set for signature orderings
    BigCount value;

    friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

struct SequenceTable {
    Invariant invariant = Invariant::Order;
    Ordering ordering = Ordering::Natural;
    std::vector<SequenceEntry> entries;
    std::vector<std::string> notes;
};

struct GenerateOptions {
    unsigned max_big_omega = kDefaultPathDpBudget;
    std::uint64_t integer_bound = kDefaultIntegerBound;
    Execution exec = Execution::serial();
};

/// Natural: key n = 1..count, value = invariant of signature_of(n).
/// Signature orders: key i = 0..count-1 over enumerate_signatures.
/// Throws UsageError for LI under Natural.
SequenceTable generate(Invariant inv, Ordering ordering, std::size_t count,
                       const GenerateOptions& options = {});

enum class OutputFormat { Csv, Json, BFile };

std::optional<OutputFormat> parse_output_format(std::string_view text);

std::string emit(const SequenceTable& table, OutputFormat format);

/// One "index value" pair of an OEIS b-file.
struct BFileEntry {
    std::int64_t index = 0;
    BigCount value;
    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Skips blank lines and '#' comments, tolerates leading/trailing
/// whitespace. Throws FormatError with the offending line number.
std::vector<BFileEntry> parse_bfile(std::string_view text);

struct Mismatch {
    std::uint64_t key = 0;         // our key
    std::int64_t their_index = 0;  // index on the reference side
    BigCount ours;
    BigCount theirs;
};

struct MatchReport {
    std::int64_t reference_offset = 0;  // first index listed in the reference
    std::int64_t shift = 0;             // reference_offset - first table key
    std::size_t compared = 0;           // min(table size, reference size)
    std::size_t matched_prefix = 0;
    std::optional<Mismatch> first_mismatch;

    bool full_match() const noexcept { return !first_mismatch.has_value(); }
};

/// Position-wise comparison after aligning the first entries of both sides.
MatchReport compare_bfile(const SequenceTable& table, std::string_view reference);

std::string to_json(const MatchReport& report);

}  // namespace divlat

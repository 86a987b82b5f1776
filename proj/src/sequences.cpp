#include "divlat/sequences.hpp"

#include <cctype>
#include <charconv>

#include <json.hpp>

namespace divlat {

std::string_view to_string(Ordering ordering) {
    switch (ordering) {
        case Ordering::Natural: return "natural";
        case Ordering::GradedColex: return "colex";
        case Ordering::Canonical: return "canonical";
    }
    return "?";
}

std::optional<Ordering> parse_ordering(std::string_view text) {
    if (text == "natural") return Ordering::Natural;
    if (text == "colex" || text == "graded-colex" || text == "gradedcolex") return Ordering::GradedColex;
    if (text == "canonical") return Ordering::Canonical;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "bfile" || text == "b-file") return OutputFormat::BFile;
    return std::nullopt;
}

SequenceTable generate(Invariant inv, Ordering ordering, std::size_t count, const GenerateOptions& options) {
    if (inv == Invariant::LeastInteger && ordering == Ordering::Natural) {
        throw UsageError("LI is only defined under a signature ordering");
    }
    SequenceTable table;
    table.invariant = inv;
    table.ordering = ordering;
    table.entries.resize(count);

    if (ordering == Ordering::Natural) {
        parallel_for(count, options.exec, [&](std::size_t i) {
            auto& e = table.entries[i];
            e.key = i + 1;
            const auto s = signature_of(e.key, options.integer_bound);
            e.value = invariant_value(inv, s, options.max_big_omega);
        });
        if (inv == Invariant::WidthArcs && count > 0) {
            table.notes.emplace_back(
                "W_e(1) = 0: the maximum over an empty set of levels; one published table prints 1 here");
        }
    } else {
        const auto order = ordering == Ordering::GradedColex ? SignatureOrder::GradedColex : SignatureOrder::Canonical;
        const auto sigs = enumerate_signatures(order, count);
        parallel_for(count, options.exec, [&](std::size_t i) {
            auto& e = table.entries[i];
            e.key = i;
            e.signature = sigs[i];
            e.value = inv == Invariant::LeastInteger ? BigCount(least_integer(sigs[i], options.integer_bound))
                                                     : invariant_value(inv, sigs[i], options.max_big_omega);
        });
    }
    return table;
}

namespace {

nlohmann::ordered_json json_value(const BigCount& v) {
    if (const auto small = to_u64(v)) return *small;
    return to_decimal(v);
}

}  // namespace

std::string emit(const SequenceTable& table, OutputFormat format) {
    const bool with_signature = table.ordering != Ordering::Natural;
    std::string out;
    switch (format) {
        case OutputFormat::Csv:
            out = with_signature ? "key,signature,value\n" : "key,value\n";
            for (const auto& e : table.entries) {
                out += std::to_string(e.key) + ',';
                if (with_signature) out += (e.signature ? e.signature->to_string() : std::string()) + ',';
                out += to_decimal(e.value) + '\n';
            }
            return out;
        case OutputFormat::BFile:
            for (const auto& e : table.entries) out += std::to_string(e.key) + ' ' + to_decimal(e.value) + '\n';
            return out;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["invariant"] = invariant_id(table.invariant);
            j["ordering"] = to_string(table.ordering);
            auto entries = nlohmann::ordered_json::array();
            for (const auto& e : table.entries) {
                nlohmann::ordered_json row;
                row["key"] = e.key;
                if (e.signature) row["signature"] = e.signature->to_string();
                row["value"] = json_value(e.value);
                entries.push_back(std::move(row));
            }
            j["entries"] = std::move(entries);
            if (!table.notes.empty()) j["notes"] = table.notes;
            return j.dump() + "\n";
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<BigCount> parse_signed(std::string_view token) {
    const bool negative = !token.empty() && token.front() == '-';
    if (negative) token.remove_prefix(1);
    auto v = parse_decimal(token);
    if (v && negative) *v = -*v;
    return v;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;

        std::size_t split = 0;
        while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
        const auto index_text = line.substr(0, split);
        const auto value_text = trim(line.substr(split));
        if (value_text.empty()) throw FormatError(line_no, "expected \"index value\"");
        if (value_text.find_first_of(" \t") != std::string_view::npos) {
            throw FormatError(line_no, "trailing fields after the value");
        }

        BFileEntry entry;
        const auto [end, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), entry.index);
        if (ec != std::errc() || end != index_text.data() + index_text.size()) {
            throw FormatError(line_no, "bad index \"" + std::string(index_text) + "\"");
        }
        auto value = parse_signed(value_text);
        if (!value) throw FormatError(line_no, "bad value \"" + std::string(value_text) + "\"");
        entry.value = std::move(*value);
        out.push_back(std::move(entry));
    }
    return out;
}

MatchReport compare_bfile(const SequenceTable& table, std::string_view reference) {
    const auto ref = parse_bfile(reference);
    MatchReport report;
    if (!ref.empty()) report.reference_offset = ref.front().index;
    if (!ref.empty() && !table.entries.empty()) {
        report.shift = ref.front().index - static_cast<std::int64_t>(table.entries.front().key);
    }
    report.compared = std::min(ref.size(), table.entries.size());
    for (std::size_t i = 0; i < report.compared; ++i) {
        const auto& ours = table.entries[i];
        if (ours.value != ref[i].value) {
            report.first_mismatch = Mismatch{ours.key, ref[i].index, ours.value, ref[i].value};
            break;
        }
        ++report.matched_prefix;
    }
    return report;
}

std::string to_json(const MatchReport& report) {
    nlohmann::ordered_json j;
    j["reference_offset"] = report.reference_offset;
    j["shift"] = report.shift;
    j["compared"] = report.compared;
    j["matched_prefix"] = report.matched_prefix;
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        j["first_mismatch"] = {{"key", m.key},
                               {"reference_index", m.their_index},
                               {"ours", to_decimal(m.ours)},
                               {"theirs", to_decimal(m.theirs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace divlat

#include "antijam/trace.hpp"

#include "antijam/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace antijam {

std::string format_real(double x) {
    char buf[40];
    // %.17g guarantees an exact double round-trip.
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

static const char kTraceHeader[] = "t,num_transmitters,sender,jammed,outcome,cumulative_p";

void write_trace_csv(const RunTrace& trace, std::ostream& out) {
    out << kTraceHeader << '\n';
    for (const SlotRecord& r : trace.records) {
        out << r.t << ',' << r.num_transmitters << ',';
        if (r.sender) {
            out << *r.sender;
        }
        out << ',' << (r.jammed ? 1 : 0) << ',' << to_string(r.outcome) << ',';
        if (r.cumulative_p) {
            out << format_real(*r.cumulative_p);
        }
        out << '\n';
    }
}

std::string trace_to_csv(const RunTrace& trace) {
    std::ostringstream out;
    write_trace_csv(trace, out);
    return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::vector<SlotRecord> parse_trace_csv(std::istream& in) {
    std::vector<SlotRecord> records;
    std::string line;
    if (!std::getline(in, line) || line != kTraceHeader) {
        throw MetricsError("trace CSV: missing or unexpected header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 6) {
            throw MetricsError("trace CSV: expected 6 fields, got " +
                               std::to_string(fields.size()));
        }
        SlotRecord r;
        r.t = std::strtoll(fields[0].c_str(), nullptr, 10);
        r.num_transmitters = static_cast<std::int32_t>(std::strtol(fields[1].c_str(), nullptr, 10));
        if (!fields[2].empty()) {
            r.sender = static_cast<std::int32_t>(std::strtol(fields[2].c_str(), nullptr, 10));
        }
        r.jammed = fields[3] == "1";
        const auto outcome = outcome_from_string(fields[4]);
        if (!outcome) {
            throw MetricsError("trace CSV: unknown outcome '" + fields[4] + "'");
        }
        r.outcome = *outcome;
        if (!fields[5].empty()) {
            r.cumulative_p = std::strtod(fields[5].c_str(), nullptr);
        }
        records.push_back(r);
    }
    return records;
}

void write_node_state_csv_header(std::ostream& out) {
    out << "t,node_id,p_v,c_v,T_v\n";
}

void write_node_state_csv_rows(std::int64_t t, std::span<const NodeState> states,
                               std::ostream& out) {
    for (std::size_t v = 0; v < states.size(); ++v) {
        out << t << ',' << v << ',' << format_real(states[v].p) << ',' << states[v].counter
            << ',' << states[v].threshold << '\n';
    }
}

} // namespace antijam

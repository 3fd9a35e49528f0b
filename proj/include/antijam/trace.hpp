#pragma once

#include "antijam/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace antijam {

// Renders a double with enough digits to round-trip exactly (>= 12 significant).
std::string format_real(double x);

// One CSV row per slot: t,num_transmitters,sender,jammed,outcome,cumulative_p.
// sender and cumulative_p are empty when absent; jammed is 0/1; outcome is the
// literal word. Byte-identical for identical runs.
void write_trace_csv(const RunTrace& trace, std::ostream& out);
std::string trace_to_csv(const RunTrace& trace);

// Parses a trace CSV (as written above). Throws MetricsError on malformed input.
std::vector<SlotRecord> parse_trace_csv(std::istream& in);

// Debug export of per-slot node states: t,node_id,p_v,c_v,T_v.
void write_node_state_csv_header(std::ostream& out);
void write_node_state_csv_rows(std::int64_t t, std::span<const NodeState> states,
                               std::ostream& out);

} // namespace antijam

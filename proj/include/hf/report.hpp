#pragma once

#include <ostream>

#include "hf/verify.hpp"

namespace hf {

enum class OutputFormat { Human, Csv, Jsonl };

OutputFormat parse_format(const std::string& name);

// Machine formats render rationals exactly ("25/12"); decimals appear only in
// human output and are marked approximate. Wall times never reach the report
// stream, so identical runs produce byte-identical output.
void write_report(std::ostream& os, const VerificationReport& rep, OutputFormat fmt,
                  bool with_header);
void write_csv_header(std::ostream& os);

// Registry export: one record per descriptor (id, parameters, backends,
// relations, statement).
void write_registry(std::ostream& os, OutputFormat fmt);

}  // namespace hf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratsum/cocycle.hpp"
#include "stratsum/complex.hpp"
#include "stratsum/parcel.hpp"

namespace stratsum {

// Document formats are JSON with a format tag; parsing is strict (unknown
// fields rejected, every index range-checked) and printing is canonical
// (sorted keys, fixed layout), so parse-then-print is stable.

StratifiedComplex parse_complex(const std::string& text);
std::string print_complex(const StratifiedComplex& c);

Gamma2Parcel parse_parcel(const std::string& text);
std::string print_parcel(const Gamma2Parcel& p);

GroupCochain parse_cochain(const std::string& text);
std::string print_cochain(const GroupCochain& c);

// Built-in example complexes; throws Error("unknown_example").
StratifiedComplex gen_example(const std::string& name);
std::vector<std::string> example_names();

// FNV-1a, used for input digests in run records.
uint64_t fnv1a64(const std::string& data);

// Canonical run record for auditing command outputs across sessions.
std::string make_run_record(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                            const std::vector<std::pair<std::string, std::string>>& outputs);

}  // namespace stratsum

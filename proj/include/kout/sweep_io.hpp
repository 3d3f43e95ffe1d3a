#pragma once

#include <iosfwd>
#include <string>

#include "kout/montecarlo.hpp"

namespace kout {

inline constexpr const char* kSweepCsvHeader =
    "n,K,p,k,trials,p_min_degree,p_kconn,se_min_degree,se_kconn,seed";

/// CSV with kSweepCsvHeader; reals use the shortest round-trip form.
void write_sweep_csv(std::ostream& out, const SweepTable& table);
SweepTable read_sweep_csv(std::istream& in);

/// JSON array of row objects keyed like the CSV columns.
std::string sweep_to_json(const SweepTable& table);
SweepTable sweep_from_json(const std::string& text);

} // namespace kout

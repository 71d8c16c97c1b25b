#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wasync/core/automaton.hpp"
#include "wasync/harness/runner.hpp"

namespace wasync::detail {

std::vector<CampaignSpec> bound_campaigns();
std::vector<CampaignSpec> graph_campaigns();
std::vector<CampaignSpec> sat_campaigns();
std::vector<CampaignSpec> engine_campaigns();

/// SHA-256 of "<campaign>\n<text>".
std::string instance_digest(std::string_view campaign, std::string_view text);

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// True iff `w` takes `s` to a single state.
bool synchronizes(const Dfa& a, const StateSet& s, const Word& w);

}  // namespace wasync::detail

/* SPDX-License-Identifier: Apache-2.0 */

#include "voltrace/phy_guess.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace voltrace {

origin classify_origin(const pucch_observation& obs, const origin_thresholds& thr)
{
  if (!(thr.ta_tolerance_us > 0.0) || !std::isfinite(obs.ta_us)) {
    throw error(errc::domain, "classify_origin: bad tolerance or TA");
  }
  bool victim = std::abs(obs.ta_us) <= thr.ta_tolerance_us && obs.snr_db >= thr.snr_min_db;
  return victim ? origin::victim : origin::other;
}

std::vector<pucch_observation> filter_victim(std::span<const pucch_observation> stream,
                                             pucch_kind kind, const origin_thresholds& thr)
{
  std::vector<pucch_observation> out;
  for (const auto& obs : stream) {
    if (obs.kind == kind && classify_origin(obs, thr) == origin::victim) {
      out.push_back(obs);
    }
  }
  return out;
}

namespace {

// Walk a victim train: measure the gap between the anchor and the next
// observation, restart from the next one if the gap has no table row.
// `lookup` throws error(domain) for unsupported periods.
template <typename LookupFn>
struct recovered_period {
  int periodicity_ms;
  int subframe_offset;
  int config_index;
  size_t anchor_pos;     // index of the observation that fixed the offset
  size_t resolved_pos;   // index of the observation that fixed the period
  int retries;
  LookupFn* unused = nullptr;
};

template <typename LookupFn>
recovered_period<LookupFn> recover_period(std::span<const pucch_observation> train,
                                          LookupFn&& lookup, const char* what)
{
  if (train.size() < 2) {
    throw error(errc::insufficient, std::string(what) + ": insufficient observations");
  }
  int retries = 0;
  size_t anchor = 0;
  while (anchor + 1 < train.size()) {
    int t1 = tti_index(train[anchor].at);
    int t2 = tti_index(train[anchor + 1].at);
    int p = tti_delta_index(t1, t2);
    int offset = t1 % p;
    try {
      int index = lookup(p, offset);
      return {p, offset, index, anchor, anchor + 1, retries};
    } catch (const error&) {
      // No table row for this gap; the anchor pair straddled a miss.
      ++retries;
      ++anchor;
    }
  }
  throw error(errc::insufficient, std::string(what) + ": lookup failure");
}

} // namespace

sr_guess guess_sr_config(std::span<const pucch_observation> victim_srs,
                         std::optional<int> known_periodicity_ms, int dsr_trans_max)
{
  if (dsr_trans_max <= 0) {
    throw error(errc::domain, "guess_sr_config: dsr_trans_max must be positive");
  }
  sr_guess out;
  out.config.dsr_trans_max = dsr_trans_max;

  if (known_periodicity_ms) {
    // Stable per-LCID periodicity: resolve from the first SR, nothing dropped.
    if (victim_srs.empty()) {
      throw error(errc::insufficient, "guess_sr_config: insufficient observations");
    }
    const auto& first = victim_srs.front();
    int p = *known_periodicity_ms;
    int offset = tti_index(first.at) % p;
    out.config.periodicity_ms = p;
    out.config.subframe_offset = offset;
    out.config.sr_config_index = sr_config_lookup(p, offset);
    out.config.sr_pucch_resource_index = first.pucch_index;
    out.log.consumed = 1;
    return out;
  }

  auto rec = recover_period(victim_srs, sr_config_lookup, "guess_sr_config");
  if (rec.retries >= dsr_trans_max) {
    throw error(errc::insufficient, "guess_sr_config: dsr_trans_max exceeded");
  }
  out.config.periodicity_ms = rec.periodicity_ms;
  out.config.subframe_offset = rec.subframe_offset;
  out.config.sr_config_index = rec.config_index;
  out.config.sr_pucch_resource_index = victim_srs[rec.resolved_pos].pucch_index;
  out.log.consumed = static_cast<int>(rec.resolved_pos) + 1;
  out.log.lookup_retries = rec.retries;
  // Every anchor before the resolving observation was flushed without a grant.
  for (size_t i = 0; i <= rec.anchor_pos; ++i) {
    out.log.dropped_tti_indices.push_back(tti_index(victim_srs[i].at));
  }
  return out;
}

cqi_guess guess_cqi_config(std::span<const pucch_observation> victim_stream, bool mimo)
{
  std::vector<pucch_observation> cqis;
  std::vector<pucch_observation> ris;
  for (const auto& obs : victim_stream) {
    if (obs.kind == pucch_kind::cqi) {
      cqis.push_back(obs);
    } else if (obs.kind == pucch_kind::ri) {
      ris.push_back(obs);
    }
  }

  cqi_guess out;
  auto rec = recover_period(std::span<const pucch_observation>(cqis), cqi_config_lookup,
                            "guess_cqi_config");
  out.config.cqi_pmi_config_index = rec.config_index;
  out.config.cqi_pucch_resource_index = cqis.front().pucch_index;
  out.log.consumed = static_cast<int>(rec.resolved_pos) + 1;
  out.log.lookup_retries = rec.retries;

  if (mimo) {
    auto ri = recover_period(std::span<const pucch_observation>(ris), cqi_config_lookup,
                             "guess_cqi_config[ri]");
    out.config.ri_config_index = ri.config_index;
    out.ri_log.consumed = static_cast<int>(ri.resolved_pos) + 1;
    out.ri_log.lookup_retries = ri.retries;
  }
  return out;
}

candidate_ranking rank_candidates(const std::string& parameter, std::span<const int> history)
{
  if (history.empty()) {
    throw error(errc::insufficient, "rank_candidates: empty history");
  }
  std::vector<int> order;                // first-occurrence order
  std::map<int, int> counts;
  for (int v : history) {
    if (counts.find(v) == counts.end()) {
      order.push_back(v);
    }
    counts[v]++;
  }
  candidate_ranking out;
  out.parameter = parameter;
  for (int v : order) {
    out.ranked.push_back({v, static_cast<double>(counts[v]) / static_cast<double>(history.size())});
  }
  std::stable_sort(out.ranked.begin(), out.ranked.end(),
                   [](const ranked_value& a, const ranked_value& b) {
                     return a.frequency > b.frequency;
                   });
  return out;
}

} // namespace voltrace

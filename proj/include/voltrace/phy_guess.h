/* SPDX-License-Identifier: Apache-2.0 */

#ifndef VOLTRACE_PHY_GUESS_H
#define VOLTRACE_PHY_GUESS_H

#include "voltrace/sr_table.h"
#include "voltrace/tti.h"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace voltrace {

enum class pucch_kind { sr, cqi, ri };

struct pucch_observation {
  pucch_kind kind = pucch_kind::sr;
  tti at;
  int pucch_index = 0;  // frequency-domain resource index
  double ta_us = 0.0;
  double snr_db = 0.0;
};

enum class origin { victim, other };

// Cuts between the two clusters seen on a live PUCCH capture: a relay-aligned
// victim sits at TA ~0us / SNR well above 20dB, everything else spreads over
// +-20us with SNR below 0dB. Boundary values classify as victim.
struct origin_thresholds {
  double ta_tolerance_us = 2.0;
  double snr_min_db = 10.0;
};

origin classify_origin(const pucch_observation& obs, const origin_thresholds& thr = {});

std::vector<pucch_observation> filter_victim(std::span<const pucch_observation> stream,
                                             pucch_kind kind,
                                             const origin_thresholds& thr = {});

struct sr_config {
  int periodicity_ms = 0;
  int subframe_offset = 0;
  int sr_config_index = 0;
  int sr_pucch_resource_index = 0;
  int dsr_trans_max = 0;

  bool operator==(const sr_config&) const = default;
};

struct cqi_config {
  int cqi_pucch_resource_index = 0;
  int cqi_pmi_config_index = 0;             // expands to (periodicity, offset)
  std::optional<int> ri_config_index;       // present only for MIMO
  std::string format_indicator = "periodic";

  bool operator==(const cqi_config&) const = default;
};

/// What the guessing procedure did: how many messages it consumed, which TTIs
/// it deliberately flushed (forcing a re-send), and how often a derived
/// periodicity missed the table and forced a restart.
struct guess_log {
  int consumed = 0;
  std::vector<int> dropped_tti_indices;
  int lookup_retries = 0;
};

struct sr_guess {
  sr_config config;
  guess_log log;
};

struct cqi_guess {
  cqi_config config;
  guess_log log;     // CQI consumption; never contains drops
  guess_log ri_log;  // populated only when MIMO
};

/// Recover schedulingRequestConfig from a victim-classified SR stream.
///
/// Without a known periodicity the first SR is flushed so the UE re-sends,
/// the second gives the period by subtraction, and the offset is the first
/// TTI modulo the period. With a known periodicity the first SR resolves the
/// config immediately and nothing is dropped. When a derived period has no
/// table row the procedure restarts from the following SR.
sr_guess guess_sr_config(std::span<const pucch_observation> victim_srs,
                         std::optional<int> known_periodicity_ms, int dsr_trans_max);

/// Same period/offset recovery for cqi-ReportConfig, except the first message
/// is processed rather than dropped (it steers the downlink MCS). RI is
/// recovered from RI-kind observations only when `mimo` is set.
cqi_guess guess_cqi_config(std::span<const pucch_observation> victim_stream, bool mimo);

struct ranked_value {
  int value = 0;
  double frequency = 0.0;

  bool operator==(const ranked_value&) const = default;
};

struct candidate_ranking {
  std::string parameter;
  std::vector<ranked_value> ranked;  // descending frequency, ties by first occurrence
};

candidate_ranking rank_candidates(const std::string& parameter, std::span<const int> history);

} // namespace voltrace

#endif // VOLTRACE_PHY_GUESS_H

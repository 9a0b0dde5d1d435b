/* SPDX-License-Identifier: Apache-2.0 */

#ifndef VOLTRACE_SR_TABLE_H
#define VOLTRACE_SR_TABLE_H

#include "voltrace/errors.h"

namespace voltrace {

struct periodicity_offset {
  int periodicity_ms = 0;
  int subframe_offset = 0;

  bool operator==(const periodicity_offset&) const = default;
};

// SR configuration index table (36.213 Table 10.1.5-1 layout).
// Index ladder: [0,4]=5ms, [5,14]=10ms, [15,34]=20ms, [35,74]=40ms,
// [75,154]=80ms, [155,156]=2ms, [157]=1ms; offset = index - ladder base.
inline constexpr int sr_config_index_max = 157;

bool sr_periodicity_supported(int periodicity_ms);

/// Unique index whose expansion equals (periodicity, offset).
int sr_config_lookup(int periodicity_ms, int subframe_offset);

periodicity_offset sr_config_expand(int sr_config_index);

// Periodic CQI/RI index ladder, used for cqi-pmi-ConfigIndex and
// ri-ConfigIndex. Same shape as the SR table but covers periods
// {2,5,10,20,40,80,160} with bases 0/2/7/17/37/77/157.
inline constexpr int cqi_config_index_max = 316;

bool cqi_periodicity_supported(int periodicity_ms);

int cqi_config_lookup(int periodicity_ms, int subframe_offset);

periodicity_offset cqi_config_expand(int cqi_config_index);

} // namespace voltrace

#endif // VOLTRACE_SR_TABLE_H

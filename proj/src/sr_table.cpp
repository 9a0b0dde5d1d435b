/* SPDX-License-Identifier: Apache-2.0 */

#include "voltrace/sr_table.h"

#include <array>
#include <fmt/format.h>

namespace voltrace {

namespace {

struct ladder_row {
  int first_index;
  int periodicity_ms;
};

// One row per periodicity; offsets fill [first_index, first_index + p).
constexpr std::array<ladder_row, 7> sr_ladder = {{
    {0, 5},
    {5, 10},
    {15, 20},
    {35, 40},
    {75, 80},
    {155, 2},
    {157, 1},
}};

constexpr std::array<ladder_row, 7> cqi_ladder = {{
    {0, 2},
    {2, 5},
    {7, 10},
    {17, 20},
    {37, 40},
    {77, 80},
    {157, 160},
}};

template <size_t N>
int ladder_lookup(const std::array<ladder_row, N>& ladder, int periodicity_ms, int offset,
                  const char* what)
{
  for (const auto& row : ladder) {
    if (row.periodicity_ms == periodicity_ms) {
      if (offset < 0 || offset >= periodicity_ms) {
        throw error(errc::domain, fmt::format("{}: offset {} not in [0,{})", what, offset,
                                              periodicity_ms));
      }
      return row.first_index + offset;
    }
  }
  throw error(errc::domain, fmt::format("{}: no table row for periodicity {}", what,
                                        periodicity_ms));
}

template <size_t N>
periodicity_offset ladder_expand(const std::array<ladder_row, N>& ladder, int index, int index_max,
                                 const char* what)
{
  if (index < 0 || index > index_max) {
    throw error(errc::domain, fmt::format("{}: index {} out of range [0,{}]", what, index,
                                          index_max));
  }
  for (const auto& row : ladder) {
    if (index >= row.first_index && index < row.first_index + row.periodicity_ms) {
      return periodicity_offset{row.periodicity_ms, index - row.first_index};
    }
  }
  throw error(errc::domain, fmt::format("{}: index {} unmapped", what, index));
}

} // namespace

bool sr_periodicity_supported(int periodicity_ms)
{
  for (const auto& row : sr_ladder) {
    if (row.periodicity_ms == periodicity_ms) {
      return true;
    }
  }
  return false;
}

int sr_config_lookup(int periodicity_ms, int subframe_offset)
{
  return ladder_lookup(sr_ladder, periodicity_ms, subframe_offset, "sr_config_lookup");
}

periodicity_offset sr_config_expand(int sr_config_index)
{
  return ladder_expand(sr_ladder, sr_config_index, sr_config_index_max, "sr_config_expand");
}

bool cqi_periodicity_supported(int periodicity_ms)
{
  for (const auto& row : cqi_ladder) {
    if (row.periodicity_ms == periodicity_ms) {
      return true;
    }
  }
  return false;
}

int cqi_config_lookup(int periodicity_ms, int subframe_offset)
{
  return ladder_lookup(cqi_ladder, periodicity_ms, subframe_offset, "cqi_config_lookup");
}

periodicity_offset cqi_config_expand(int cqi_config_index)
{
  return ladder_expand(cqi_ladder, cqi_config_index, cqi_config_index_max, "cqi_config_expand");
}

} // namespace voltrace

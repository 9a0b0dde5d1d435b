/* SPDX-License-Identifier: Apache-2.0 */

#include "voltrace/tti.h"

namespace voltrace {

bool tti_valid(const tti& t)
{
  return t.sfn >= 0 && t.sfn <= sfn_max && t.subframe >= 0 && t.subframe <= 9;
}

int tti_index(const tti& t)
{
  if (!tti_valid(t)) {
    throw error(errc::domain, "tti out of range");
  }
  return 10 * t.sfn + t.subframe;
}

tti tti_from_index(int index)
{
  if (index < 0 || index >= tti_modulus) {
    throw error(errc::domain, "tti index out of range");
  }
  return tti{index / 10, index % 10};
}

int tti_delta_index(int earlier_index, int later_index)
{
  int d = (later_index - earlier_index) % tti_modulus;
  if (d < 0) {
    d += tti_modulus;
  }
  if (d == 0) {
    throw error(errc::domain, "zero period");
  }
  return d;
}

int tti_delta(const tti& earlier, const tti& later)
{
  return tti_delta_index(tti_index(earlier), tti_index(later));
}

} // namespace voltrace

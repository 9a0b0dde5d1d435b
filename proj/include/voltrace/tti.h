/* SPDX-License-Identifier: Apache-2.0 */

#ifndef VOLTRACE_TTI_H
#define VOLTRACE_TTI_H

#include "voltrace/errors.h"

namespace voltrace {

// Transmission time interval position. The flat index is 10 * sfn + subframe
// and all arithmetic wraps modulo tti_modulus (SFN rolls over at 1024).
inline constexpr int sfn_max = 1023;
inline constexpr int tti_modulus = 10240;

struct tti {
  int sfn = 0;       // system frame number, [0, 1023]
  int subframe = 0;  // [0, 9]
};

bool tti_valid(const tti& t);

/// Flat index in [0, 10239]. Throws on out-of-range fields.
int tti_index(const tti& t);

tti tti_from_index(int index);

/// Wrapped distance from `earlier` to `later`, in (0, 10240).
/// Identical TTIs are rejected: a periodicity of zero is meaningless.
int tti_delta(const tti& earlier, const tti& later);

int tti_delta_index(int earlier_index, int later_index);

} // namespace voltrace

#endif // VOLTRACE_TTI_H

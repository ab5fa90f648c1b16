#ifndef SEGRC_THREADING_HPP
#define SEGRC_THREADING_HPP

namespace segrc {

/// Effective worker count for OpenMP regions: the SEGRC_THREADS environment
/// variable when set (clamped to >= 1), otherwise the OpenMP default.
/// Returns 1 when the build has no OpenMP support.
int thread_count();

}  // namespace segrc

#endif  // SEGRC_THREADING_HPP

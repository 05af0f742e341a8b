/* exec.hpp -- execution policy for the dual serial/OpenMP kernels. */

#ifndef SYNCKIT_EXEC_HPP_
#define SYNCKIT_EXEC_HPP_

namespace synckit {

/// Selects between the serial reference implementation of a kernel and the
/// OpenMP one. Both produce bit-identical results; `parallel` degrades to the
/// serial path when OpenMP is unavailable or the input is small.
enum class Exec {
    serial,
    parallel,
};

/// Number of OpenMP worker threads (1 without OpenMP).
int max_threads();

} // namespace synckit

#endif // SYNCKIT_EXEC_HPP_

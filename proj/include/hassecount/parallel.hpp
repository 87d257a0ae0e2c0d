#pragma once

// Every sweep kernel takes an Execution switch: the serial path is the
// reference the OpenMP path is tested against.

namespace hassecount {

enum class Execution { serial, parallel };

// Worker count for Execution::parallel; n <= 0 restores the OpenMP default.
void set_worker_count(int n);
int worker_count();

}  // namespace hassecount

#pragma once

#include <stdexcept>
#include <string>

namespace dfnrank {

/// Failure categories surfaced by the library. Every Error carries one.
enum class Errc {
  invalid_params,      // ChainParams invariants violated (n < 0, m < 2, bad scale)
  length_mismatch,     // level array length != n+1
  level_out_of_range,  // level index outside {1..m}
  not_normal,          // no point reaches the top level m
  not_unimodal,        // membership rises again after falling
  not_nested,          // alpha-cut chain violates containment
  base_cut_not_full,   // level-1 cut is not the whole chain
  chain_mismatch,      // operands belong to different chains (n or m differ)
  invalid_interval,    // lo > hi, or endpoints outside the chain
  index_out_of_range,  // position index outside [0, N-1]
  invalid_dfn,         // dfn handed to an algorithm fails validation
  instance_too_large,  // brute-force enumeration would exceed the safety cap
  range_violation,     // index function escaped [0, k]
  cap_exceeded,        // exhaustive axiom check beyond its budget
  degenerate_input,    // regression fit on too few / non-positive data
  inconsistent_order,  // custom comparator is not a total order
  io_error,            // file output failed
  invalid_argument,    // malformed textual input (dfn string, decimal, name)
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dfnrank

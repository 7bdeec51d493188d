#pragma once

#include <stdexcept>
#include <string>

namespace circis {

enum class Errc {
  out_of_range,
  not_symmetric,
  order_mismatch,
  empty_spec,
  bad_index,
  precondition_violated,
  empty_graph,
  empty_set,
  bad_gap_sum,
  cap_exceeded,
  unknown_suite,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::empty_spec: return "EmptySpec";
    case Errc::bad_index: return "BadIndex";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::empty_set: return "EmptySet";
    case Errc::bad_gap_sum: return "BadGapSum";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace circis

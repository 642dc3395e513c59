#include "rna/solve_report.hpp"

namespace rna {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::brute_force: return "brute";
    case Method::branch_and_bound: return "bnb";
    case Method::heuristic: return "heuristic";
  }
  return "unknown";
}

}  // namespace rna

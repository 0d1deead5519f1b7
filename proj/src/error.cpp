#include "ringlab/error.hpp"

namespace ringlab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::table_shape: return "table-shape";
    case errc::not_a_group: return "not-a-group";
    case errc::not_associative: return "not-associative";
    case errc::not_distributive: return "not-distributive";
    case errc::no_unity: return "no-unity";
    case errc::non_unital_unsupported: return "non-unital-unsupported";
    case errc::mixed_unitality: return "mixed-unitality";
    case errc::order_too_large: return "order-too-large";
    case errc::parse_error: return "parse-error";
    case errc::ring_mismatch: return "ring-mismatch";
    case errc::zero_polynomial: return "zero-polynomial";
    case errc::not_semicommutative: return "not-semicommutative";
    case errc::product_not_zero: return "product-not-zero";
    case errc::not_left_duo: return "not-left-duo";
    case errc::not_right_duo: return "not-right-duo";
    case errc::not_duo: return "not-duo";
    case errc::witness_not_found: return "witness-not-found";
    case errc::nontermination_guard: return "nontermination-guard";
    case errc::claim_violated: return "claim-violated";
  }
  return "unknown";
}

} // namespace ringlab

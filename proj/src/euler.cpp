#include "bunred/euler.hpp"

#include "bunred/checked.hpp"

namespace bunred {

std::int64_t euler_form(const GenusContext& ctx, const SheafType& t1, const SheafType& t2) {
  using namespace checked;
  const std::int64_t quadratic = mul(ctx.one_minus_g(), t1.rank(), t2.rank());
  return sub(add(quadratic, mul(t1.rank(), t2.degree())), mul(t2.rank(), t1.degree()));
}

std::int64_t bun_stack_dim(const GenusContext& ctx, const SheafType& t) {
  return checked::neg(euler_form(ctx, t, t));
}

std::int64_t ext_relative_dim(const GenusContext& ctx, const SheafType& t1, const SheafType& t2) {
  return checked::neg(euler_form(ctx, t2, t1));
}

std::int64_t ext_stack_dim(const GenusContext& ctx, const SheafType& t1, const SheafType& t2) {
  using namespace checked;
  return sub(sub(neg(euler_form(ctx, t2, t2)), euler_form(ctx, t2, t1)), euler_form(ctx, t1, t1));
}

}  // namespace bunred

// Walks through one instance with two solutions and one family on SO(3),
// printing the metrics and their residuals.

#include <cstdio>

#include "ricci3/ricci3.hpp"

using namespace ricci3;

static void show(const UnimodularGroup& group, const DiagonalTensor& t) {
  const SolveOutcome out = solve(group, t);
  std::printf("%s T=(%g, %g, %g): %s, %s\n", group_display_name(group.name).data(), t[0], t[1], t[2],
              outcome_kind_name(out.kind).data(), case_label_name(out.case_label).data());
  for (const Solution& s : out.solutions) {
    const Certificate cert = certify(group, s.metric, s.c, t);
    std::printf("  v=(%.6f, %.6f, %.6f) c=%.6f residual=%.2e\n", s.metric[0], s.metric[1], s.metric[2], s.c,
                cert.residual_closed_form);
  }
  if (out.family) {
    const Family& f = *out.family;
    std::printf("  family %s, sample v=(%.6f, %.6f, %.6f) c=%.6f\n",
                family_constraint_name(f.constraint).data(), f.sample[0], f.sample[1], f.sample[2], f.sample_c);
  }
}

int main() {
  const UnimodularGroup so3(Group::SO3);
  show(so3, DiagonalTensor({10.0, -1.0, -1.0}));
  show(so3, DiagonalTensor({4.0, 0.0, 0.0}));
  show(UnimodularGroup(Group::SL2), DiagonalTensor({-3.0, -2.0, 1.0}));
  return 0;
}

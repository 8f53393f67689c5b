#include <sstream>

#include "qinj/oracle.hpp"
#include "qinj/regions.hpp"

namespace qinj::oracle {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string shift(int c) {
  if (c == 0) return "i";
  return c > 0 ? "i+" + std::to_string(c) : "i-" + std::to_string(-c);
}

}  // namespace

std::string random_fragment_text(std::mt19937_64& rng) {
  const char* ray_names[] = {"a", "b"};
  const char* core_names[] = {"x", "y"};
  const int rays = pick(rng, 1, 2);
  const int cores = pick(rng, 0, 2);
  std::vector<bool> is_int(rays);
  std::ostringstream os;
  os << "quiver random\n";
  for (int c = 0; c < cores; ++c) os << "vertex " << core_names[c] << "\n";
  for (int r = 0; r < rays; ++r) {
    is_int[r] = pick(rng, 0, 1) == 1;
    os << "ray " << ray_names[r] << " domain " << (is_int[r] ? "int" : "nat") << "\n";
  }
  auto lower = [&](bool all_int) {
    if (all_int && pick(rng, 0, 1)) return std::string(" for all i");
    return " for i >= " + std::to_string(pick(rng, 0, 2));
  };
  const int families = pick(rng, 1, 4);
  for (int f = 0; f < families; ++f) {
    const int kind = cores == 0 ? 0 : pick(rng, 0, 3);  // 0,1 ray-to-ray; 2 fan-out; 3 fan-in
    const int s = pick(rng, 0, rays - 1);
    os << "family f" << f << ": ";
    if (kind <= 1) {
      const int t = pick(rng, 0, rays - 1);
      const int c1 = pick(rng, 0, 1);
      int c2 = c1 + pick(rng, -1, 1);
      if (s == t && c2 == c1) c2 = c1 + 1;
      os << ray_names[s] << "[" << shift(c1) << "] -> " << ray_names[t] << "[" << shift(c2) << "]"
         << lower(is_int[s] && is_int[t]);
    } else if (kind == 2) {
      os << core_names[pick(rng, 0, cores - 1)] << " -> " << ray_names[s] << "[" << shift(pick(rng, 0, 1))
         << "]" << lower(is_int[s]);
    } else {
      os << ray_names[s] << "[i] -> " << core_names[pick(rng, 0, cores - 1)] << lower(is_int[s]);
    }
    os << "\n";
  }
  auto endpoint = [&]() {
    if (cores > 0 && pick(rng, 0, 2) == 0) return std::string(core_names[pick(rng, 0, cores - 1)]);
    const int r = pick(rng, 0, rays - 1);
    const int k = is_int[r] ? pick(rng, -2, 2) : pick(rng, 0, 2);
    return std::string(ray_names[r]) + "[" + std::to_string(k) + "]";
  };
  const int singles = pick(rng, 0, 3);
  for (int s = 0; s < singles; ++s) {
    const std::string from = endpoint();
    std::string to = endpoint();
    if (to == from) continue;
    os << "arrow g" << s << ": " << from << " -> " << to << "\n";
  }
  return os.str();
}

QuiverDescription random_fragment(std::mt19937_64& rng) {
  for (;;) {
    QuiverDescription q = parse(random_fragment_text(rng));
    try {
      require_acyclic(expand(q, 6));
    } catch (const CycleDetected&) {
      continue;
    }
    if (!oriented_cycle_check(q).ok()) continue;
    if (!is_interval_finite(q).interval_finite) continue;
    return q;
  }
}

std::string branching_fixture_text() {
  return "quiver branching\n"
         "ray a domain nat\n"
         "family alpha: a[i] -> a[i+1] for i >= 0\n"
         "family beta: a[i] -> a[i+1] for i >= 0\n";
}

}  // namespace qinj::oracle

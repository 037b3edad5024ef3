#include "xxz/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace xxz {

BetheNumberSet BetheNumberSet::from_doubled(std::vector<std::int64_t> d) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] % 2 == 0) {
      throw std::invalid_argument("Bethe numbers must be half-odd: doubled entry " +
                                  std::to_string(d[k]) + " is even");
    }
    if (k > 0 && d[k] <= d[k - 1]) {
      throw std::invalid_argument("Bethe numbers must be strictly increasing");
    }
  }
  return BetheNumberSet{std::move(d)};
}

BetheNumberSet ground_state_numbers(int L, int M) {
  if (M < 0 || M > L) throw std::invalid_argument("ground_state_numbers: need 0 <= M <= L");
  BetheNumberSet out;
  out.doubled.resize(M);
  const std::int64_t offset = (M % 2 == 0) ? (-M - 1) : (-M);
  for (int k = 0; k < M; ++k) out.doubled[k] = 2 * (k + 1) + offset;
  return out;
}

BetheNumberSet template_numbers(int L, int n_plus, int n_minus, int level_plus,
                                int level_minus) {
  if (L % 4 != 0) throw std::invalid_argument("template_numbers: L must be divisible by 4");
  if (n_plus < 0 || n_minus < 0 || level_plus < 0 || level_minus < 0) {
    throw std::invalid_argument("template_numbers: negative argument");
  }
  const int m_plus = L / 4 - n_plus;
  const int m_minus = L / 4 - n_minus;
  if (m_plus < 0 || m_minus < 0) {
    throw std::invalid_argument("template_numbers: vacancy count exceeds L/4");
  }
  if ((level_plus > 0 && m_plus == 0) || (level_minus > 0 && m_minus == 0)) {
    throw std::invalid_argument("template_numbers: no number to displace");
  }
  BetheNumberSet out;
  out.doubled.reserve(m_plus + m_minus);
  for (int k = m_minus; k >= 1; --k) {
    std::int64_t d = -(2 * k - 1);
    if (k == m_minus) d -= 2 * level_minus;
    out.doubled.push_back(d);
  }
  for (int k = 1; k <= m_plus; ++k) {
    std::int64_t d = 2 * k - 1;
    if (k == m_plus) d += 2 * level_plus;
    out.doubled.push_back(d);
  }
  return out;
}

StateClassification classify(const BetheNumberSet& numbers, int L) {
  std::int64_t card_pos = 0, card_neg = 0;
  std::int64_t sum_pos = 0, sum_neg = 0;
  for (std::int64_t d : numbers.doubled) {
    if (d > 0) {
      ++card_pos;
      sum_pos += d;
    } else {
      ++card_neg;
      sum_neg += d;
    }
  }
  StateClassification c;
  c.n_plus = 0.25 * L - static_cast<double>(card_pos);
  c.n_minus = 0.25 * L - static_cast<double>(card_neg);
  // Packed reference: m positive numbers {1, 3, ..., 2m-1}/2 sum to m^2/2.
  // Both terms share parity, so the halved difference is an exact integer.
  c.delta_plus_I = (sum_pos - card_pos * card_pos) / 2;
  c.delta_minus_I = (-sum_neg - card_neg * card_neg) / 2;
  return c;
}

bool admissible(const BetheNumberSet& numbers, int L, double gamma) {
  const auto c = classify(numbers, L);
  const double n_total = c.n_plus + c.n_minus;
  const double bound = 0.25 * L + n_total * (0.5 - gamma / M_PI);
  for (std::int64_t d : numbers.doubled) {
    if (std::abs(0.5 * static_cast<double>(d)) > bound + 1e-12) return false;
  }
  return true;
}

namespace {

// Partitions of `level` into at most m_plus strictly-decreasing displacement
// steps applied to the packed positive block, emitted as doubled numbers.
// Displacing the packed set {1, 3, ..., 2m-1}/2 by a partition
// level = d_1 >= d_2 >= ... (d_k added to the k-th largest number) keeps the
// ordering strict and reaches every configuration with the given sum once.
void emit_positive_blocks(int m_plus, int level, std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> parts(m_plus, 0);
  // parts[0] is the displacement of the outermost number.
  std::function<void(int, int, std::int64_t)> rec = [&](int idx, int remaining,
                                                        std::int64_t prev) {
    if (idx == m_plus) {
      if (remaining != 0) return;
      std::vector<std::int64_t> block(m_plus);
      for (int k = 0; k < m_plus; ++k) {
        // k-th smallest packed number is 2k+1; displacement parts[m_plus-1-k].
        block[k] = 2 * k + 1 + 2 * parts[m_plus - 1 - k];
      }
      out.push_back(std::move(block));
      return;
    }
    for (std::int64_t d = std::min<std::int64_t>(prev, remaining); d >= 0; --d) {
      parts[idx] = d;
      rec(idx + 1, remaining - static_cast<int>(d), d);
    }
  };
  if (m_plus == 0) {
    if (level == 0) out.push_back({});
    return;
  }
  rec(0, level, level);
}

}  // namespace

std::vector<BetheNumberSet> enumerate_excitations_split(int L, int m_plus, int m_minus,
                                                        int level, double gamma) {
  if (m_plus < 0 || m_minus < 0 || level < 0) {
    throw std::invalid_argument("enumerate_excitations_split: negative argument");
  }
  std::vector<std::vector<std::int64_t>> blocks;
  emit_positive_blocks(m_plus, level, blocks);

  std::vector<BetheNumberSet> out;
  for (const auto& block : blocks) {
    BetheNumberSet s;
    s.doubled.reserve(m_plus + m_minus);
    // Negative side packed: {-(2m-1), ..., -3, -1}/2.
    for (int k = m_minus; k >= 1; --k) s.doubled.push_back(-(2 * k - 1));
    s.doubled.insert(s.doubled.end(), block.begin(), block.end());
    if (admissible(s, L, gamma)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const BetheNumberSet& a, const BetheNumberSet& b) {
    return a.doubled < b.doubled;
  });
  return out;
}

std::vector<BetheNumberSet> enumerate_excitations(int L, int M, int level, double gamma) {
  const int m_plus = (M + 1) / 2;
  const int m_minus = M / 2;
  return enumerate_excitations_split(L, m_plus, m_minus, level, gamma);
}

}  // namespace xxz

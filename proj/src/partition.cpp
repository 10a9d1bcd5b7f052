#include "brauer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "brauer/error.hpp"

namespace brauer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw Error(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing and non-negative");
    }
  }
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

bool label_less(const Partition& a, const Partition& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.parts() > b.parts();
}

Partition transpose(const Partition& p) {
  std::vector<int> result;
  if (p.empty()) return Partition{};
  result.reserve(p.parts().front());
  for (int j = 1; j <= p.parts().front(); ++j) {
    int count = 0;
    for (int part : p.parts()) {
      if (part >= j) ++count;
      else break;
    }
    result.push_back(count);
  }
  return Partition(std::move(result));
}

SkewBoxes skew(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) {
    throw Error(ErrorCode::NotSubpartition, to_string(mu) + " is not contained in " + to_string(lambda));
  }
  SkewBoxes result;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = mu[i]; j < lambda[i]; ++j) {
      Box box{i + 1, j + 1};
      result.boxes.push_back(box);
      result.contents.push_back(box.content());
    }
  }
  std::sort(result.contents.begin(), result.contents.end());
  return result;
}

bool is_balanced_pair(const Partition& mu, const Partition& lambda, long delta) {
  require_nonzero_delta(delta);
  const SkewBoxes s = skew(lambda, mu);
  if (s.boxes.empty()) return true;

  // Condition (1): contents pair off with sum 1 - delta.
  std::map<long, int> count;
  for (int c : s.contents) ++count[c];
  const long target = 1 - delta;
  for (const auto& [c, k] : count) {
    const long partner = target - c;
    if (partner == c) {
      if (k % 2 != 0) return false;
    } else {
      auto it = count.find(partner);
      if (it == count.end() || it->second != k) return false;
    }
  }

  // Condition (2), only relevant for even delta where the two diagonals with
  // contents -delta/2 and 1-delta/2 pair with each other.
  if (delta % 2 != 0) return true;
  const long low = -delta / 2;
  const long high = 1 - delta / 2;
  int bottom = 0;
  int on_diagonals = 0;
  for (const Box& b : s.boxes) {
    if (b.content() == low || b.content() == high) {
      ++on_diagonals;
      bottom = std::max(bottom, b.row);
    }
  }
  if (on_diagonals == 0) return true;
  int in_bottom_row = 0;
  for (const Box& b : s.boxes) {
    if (b.row == bottom && (b.content() == low || b.content() == high)) ++in_bottom_row;
  }
  if (in_bottom_row == 1) return (on_diagonals / 2) % 2 == 0;
  return true;
}

Partition intersection(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  const int len = std::min(a.length(), b.length());
  for (int i = 0; i < len; ++i) parts.push_back(std::min(a[i], b[i]));
  return Partition(std::move(parts));
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) parts.push_back(std::max(a[i], b[i]));
  return Partition(std::move(parts));
}

bool is_balanced(const Partition& lambda, const Partition& mu, long delta) {
  require_nonzero_delta(delta);
  const Partition common = intersection(lambda, mu);
  return is_balanced_pair(common, lambda, delta) && is_balanced_pair(common, mu, delta);
}

std::vector<Partition> addable(const Partition& p) {
  std::vector<Partition> result;
  const int len = p.length();
  for (int i = 0; i <= len; ++i) {
    if (i == 0 || p[i - 1] > p[i]) {
      std::vector<int> parts = p.parts();
      if (i == len) parts.push_back(1);
      else ++parts[i];
      result.emplace_back(std::move(parts));
    }
  }
  std::sort(result.begin(), result.end(), label_less);
  return result;
}

std::vector<Partition> removable(const Partition& p) {
  std::vector<Partition> result;
  const int len = p.length();
  for (int i = 0; i < len; ++i) {
    if (p[i] > p[i + 1]) {
      std::vector<int> parts = p.parts();
      --parts[i];
      result.emplace_back(std::move(parts));
    }
  }
  std::sort(result.begin(), result.end(), label_less);
  return result;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  generate(n, n, current, out);
  return out;  // generation order is already decreasing-lexicographic
}

std::vector<Partition> partitions_up_to(int max_degree) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_degree; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long long count_standard_tableaux(const Partition& p) {
  const Partition pt = transpose(p);
  // n! / prod(hooks), evaluated incrementally to stay exact.
  std::vector<long long> hooks;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) hooks.push_back((p[i] - j - 1) + (pt[j] - i - 1) + 1);
  }
  long long result = 1;
  std::vector<long long> numerators;
  for (int k = 2; k <= p.degree(); ++k) numerators.push_back(k);
  // Cancel hooks against numerator factors by gcd to avoid overflow.
  for (long long h : hooks) {
    long long remaining = h;
    for (auto& num : numerators) {
      if (remaining == 1) break;
      const long long g = std::gcd(num, remaining);
      num /= g;
      remaining /= g;
    }
  }
  for (long long num : numerators) result *= num;
  return result;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string compact_label(const Partition& p) {
  if (p.empty()) return "0";
  if (p.parts().front() >= 10) return to_string(p);
  std::string out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t run = j - i;
    if (run >= 3) {
      if (j < parts.size()) return to_string(p);  // "2^31" would read back as 2^31
      out += std::to_string(parts[i]) + "^" + std::to_string(run);
    } else {
      for (std::size_t k = 0; k < run; ++k) out += std::to_string(parts[i]);
    }
    i = j;
  }
  return out;
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError, "cannot parse partition '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  if (text.empty() || text == "0" || text == "\xE2\x88\x85") return Partition{};
  std::vector<int> parts;
  auto push_run = [&](int part, int times) {
    if (times < 0) throw Error(ErrorCode::ParseError, "negative exponent in '" + std::string(text) + "'");
    for (int k = 0; k < times; ++k) parts.push_back(part);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = trim(text.substr(start, end - start));
      const std::size_t caret = token.find('^');
      if (caret == std::string_view::npos) {
        push_run(parse_int(token, text), 1);
      } else {
        push_run(parse_int(token.substr(0, caret), text), parse_int(token.substr(caret + 1), text));
      }
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size();) {
      const char c = text[i];
      if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "cannot parse partition '" + std::string(text) + "'");
      const int part = c - '0';
      ++i;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = i + 1;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        push_run(part, parse_int(text.substr(i + 1, j - i - 1), text));
        i = j;
      } else {
        push_run(part, 1);
      }
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "not a partition: '" + std::string(text) + "'");
  }
}

}  // namespace brauer

#include "shl/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace shl {

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0)
      throw std::invalid_argument("signature part must be nonnegative");
    if (k > 0 && parts_[k - 1] < parts_[k])
      throw std::invalid_argument("signature parts must be weakly decreasing");
  }
}

Signature Signature::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[')
    throw std::invalid_argument("signature must start with '['");
  ++pos;
  std::vector<int> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected integer part in signature");
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw std::invalid_argument("signature part out of range");
        ++pos;
      }
      parts.push_back(static_cast<int>(neg ? -value : value));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ']' in signature");
    }
  }
  skip_ws();
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after signature");
  return Signature(std::move(parts));
}

std::string Signature::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  out += ']';
  return out;
}

int Signature::mult(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<std::pair<int, int>> Signature::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it)
      ++out.back().second;
    else
      out.emplace_back(*it, 1);
  }
  return out;
}

bool Signature::all_multiplicities_even() const {
  for (const auto& [value, count] : multiplicities())
    if (count % 2 != 0) return false;
  return true;
}

long Signature::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool interlace_up(const Signature& mu, const Signature& nu) {
  if (nu.size() != mu.size() + 1) return false;
  for (int k = 0; k < mu.size(); ++k)
    if (nu[k] < mu[k] || mu[k] < nu[k + 1]) return false;
  return true;
}

namespace {

void enumerate_decreasing(int length, int bound, bool doubled,
                          std::vector<int>& prefix, std::vector<Signature>& out) {
  if (length == 0) {
    std::vector<int> parts;
    parts.reserve((doubled ? 2 : 1) * prefix.size());
    for (int part : prefix) {
      parts.push_back(part);
      if (doubled) parts.push_back(part);
    }
    out.push_back(Signature(std::move(parts)));
    return;
  }
  for (int part = bound; part >= 0; --part) {
    prefix.push_back(part);
    enumerate_decreasing(length - 1, part, doubled, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Signature> enumerate_even(int num_parts, int max_part) {
  if (num_parts < 0 || num_parts % 2 != 0)
    throw std::invalid_argument("enumerate_even needs an even number of parts");
  if (max_part < 0)
    throw std::invalid_argument("enumerate_even needs max_part >= 0");
  std::vector<Signature> out;
  std::vector<int> prefix;
  enumerate_decreasing(num_parts / 2, max_part, true, prefix, out);
  return out;
}

std::vector<Signature> enumerate_bounded(int num_parts, int max_part) {
  if (num_parts < 0)
    throw std::invalid_argument("enumerate_bounded needs num_parts >= 0");
  if (max_part < 0)
    throw std::invalid_argument("enumerate_bounded needs max_part >= 0");
  std::vector<Signature> out;
  std::vector<int> prefix;
  enumerate_decreasing(num_parts, max_part, false, prefix, out);
  return out;
}

std::optional<Signature> even_closure_up(const Signature& mu) {
  if (mu.size() % 2 == 0) return std::nullopt;
  std::vector<int> parts;
  parts.reserve(mu.size() + 1);
  for (int k = 0; k < mu.size(); k += 2) {
    parts.push_back(mu[k]);
    parts.push_back(mu[k]);
  }
  return Signature(std::move(parts));
}

std::optional<Signature> even_closure_down(const Signature& mu) {
  if (mu.size() % 2 == 0) return std::nullopt;
  std::vector<int> parts;
  parts.reserve(mu.size() - 1);
  for (int k = 1; k < mu.size(); k += 2) {
    parts.push_back(mu[k]);
    parts.push_back(mu[k]);
  }
  return Signature(std::move(parts));
}

}  // namespace shl

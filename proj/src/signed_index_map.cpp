#include "chartlab/signed_index_map.hpp"

#include <cstdlib>
#include <string>

#include "chartlab/errors.hpp"

namespace chartlab {

SignedIndexMap SignedIndexMap::from_images(int n, std::vector<int> images) {
  if (n < 0) throw InvalidMap("negative size " + std::to_string(n));
  if (n == 0) {
    if (!images.empty() && !(images.size() == 1 && images[0] == 0))
      throw InvalidMap("the trivial map has no images besides 0 -> 0");
    return {};
  }
  if (images.size() != static_cast<std::size_t>(2 * n))
    throw InvalidMap("expected " + std::to_string(2 * n) + " images, got " +
                     std::to_string(images.size()));
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v == 0 || std::abs(v) > n)
      throw InvalidMap("image " + std::to_string(v) + " is outside the signed index set");
    const auto j = static_cast<std::size_t>(index_of(n, v));
    if (hit[j]) throw InvalidMap("value " + std::to_string(v) + " is hit twice");
    hit[j] = true;
  }
  return detail::MapAccess::make(n, std::move(images));
}

SignedIndexMap SignedIndexMap::identity(int n) {
  if (n < 0) throw InvalidMap("negative size " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) images[static_cast<std::size_t>(i)] = element_at(n, i);
  return detail::MapAccess::make(n, std::move(images));
}

SignedIndexMap SignedIndexMap::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < 2 * n_; ++i)
    inv[static_cast<std::size_t>(index_of(n_, images_[static_cast<std::size_t>(i)]))] =
        element_at(n_, i);
  return detail::MapAccess::make(n_, std::move(inv));
}

SignedIndexMap SignedIndexMap::pow(long long e) const {
  SignedIndexMap base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                : static_cast<unsigned long long>(e);
  SignedIndexMap result = identity(n_);
  while (k != 0) {
    if (k & 1ULL) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

SignedIndexMap operator*(const SignedIndexMap& a, const SignedIndexMap& b) {
  if (a.size() != b.size()) throw InvalidMap("cannot compose maps of different sizes");
  const int n = a.size();
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    images[static_cast<std::size_t>(i)] = a(b.images()[static_cast<std::size_t>(i)]);
  return detail::MapAccess::make(n, std::move(images));
}

SignedIndexMap circular_perm(int n) {
  if (n < 0) throw InvalidMap("negative size " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    const int next = k == n ? 1 : k + 1;
    images[static_cast<std::size_t>(k - 1)] = next;
    images[static_cast<std::size_t>(n + k - 1)] = -next;
  }
  return detail::MapAccess::make(n, std::move(images));
}

SignedIndexMap theta(int n) {
  if (n < 1) throw InvalidMap("theta is defined for n >= 1 only");
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    const int next = k == n ? 1 : k + 1;
    const int prev = k == 1 ? n : k - 1;
    images[static_cast<std::size_t>(k - 1)] = -next;
    images[static_cast<std::size_t>(n + k - 1)] = prev;
  }
  return detail::MapAccess::make(n, std::move(images));
}

SignedIndexMap negation(int n) {
  if (n < 0) throw InvalidMap("negative size " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    images[static_cast<std::size_t>(k - 1)] = -k;
    images[static_cast<std::size_t>(n + k - 1)] = k;
  }
  return detail::MapAccess::make(n, std::move(images));
}

}  // namespace chartlab

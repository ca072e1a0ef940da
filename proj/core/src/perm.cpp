#include "multicoh/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace multicoh {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw DegreeMismatch("Perm: images are not a bijection on {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int j = 1; j <= degree(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (int j = 1; j <= degree(); ++j) {
    if (j > 1) os << ',';
    os << (*this)(j);
  }
  os << ']';
  return os.str();
}

Perm Perm::parse(const std::string& text) {
  std::size_t a = text.find('[');
  std::size_t b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw SchemaError("Perm::parse: expected bracketed image list, got '" + text + "'");
  std::vector<int> im;
  std::string inner = text.substr(a + 1, b - a - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      im.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw SchemaError("Perm::parse: bad entry '" + tok + "' in '" + text + "'");
    }
  }
  try {
    return Perm(std::move(im));
  } catch (const DegreeMismatch& e) {
    throw SchemaError(std::string("Perm::parse: ") + e.what());
  }
}

Perm compose(const Perm& sigma, const Perm& tau) {
  if (sigma.degree() != tau.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(sigma.degree()) + " and " +
                         std::to_string(tau.degree()) + " differ");
  std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
  for (int j = 1; j <= sigma.degree(); ++j) im[static_cast<std::size_t>(j - 1)] = sigma(tau(j));
  return Perm(std::move(im));
}

Perm inverse(const Perm& sigma) {
  std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
  for (int j = 1; j <= sigma.degree(); ++j) im[static_cast<std::size_t>(sigma(j) - 1)] = j;
  return Perm(std::move(im));
}

Perm shuffle_blocks(const Perm& sigma, std::span<const int> lengths) {
  const int n = sigma.degree();
  if (static_cast<int>(lengths.size()) != n)
    throw DegreeMismatch("shuffle_blocks: " + std::to_string(lengths.size()) +
                         " lengths for degree " + std::to_string(n));
  std::vector<int> offset(static_cast<std::size_t>(n + 1), 0);
  for (int m = 0; m < n; ++m) offset[static_cast<std::size_t>(m + 1)] = offset[static_cast<std::size_t>(m)] + lengths[static_cast<std::size_t>(m)];
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(offset[static_cast<std::size_t>(n)]));
  for (int j = 1; j <= n; ++j) {
    const int src = sigma(j);
    for (int i = 1; i <= lengths[static_cast<std::size_t>(src - 1)]; ++i)
      im.push_back(offset[static_cast<std::size_t>(src - 1)] + i);
  }
  return Perm(std::move(im));
}

Perm block(const Perm& sigma, std::span<const Perm> inner) {
  const int n = sigma.degree();
  if (static_cast<int>(inner.size()) != n)
    throw DegreeMismatch("block: " + std::to_string(inner.size()) + " inner permutations for degree " +
                         std::to_string(n));
  // Source block m has the degree of inner[sigma^-1(m)].
  const Perm sigma_inv = inverse(sigma);
  std::vector<int> offset(static_cast<std::size_t>(n + 1), 0);
  for (int m = 1; m <= n; ++m)
    offset[static_cast<std::size_t>(m)] =
        offset[static_cast<std::size_t>(m - 1)] + inner[static_cast<std::size_t>(sigma_inv(m) - 1)].degree();
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(offset[static_cast<std::size_t>(n)]));
  for (int j = 1; j <= n; ++j) {
    const int src = sigma(j);
    const Perm& tau = inner[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= tau.degree(); ++i) im.push_back(offset[static_cast<std::size_t>(src - 1)] + tau(i));
  }
  return Perm(std::move(im));
}

namespace {

std::vector<Perm> make_all_perms(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace

const std::vector<Perm>& all_perms(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Perm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_all_perms(n)).first;
  return it->second;
}

int perm_rank(const Perm& sigma) {
  // Lexicographic rank via the factorial number system.
  const int n = sigma.degree();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  long rank = 0;
  long fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;  // (n-1)!
  for (int j = 1; j <= n; ++j) {
    int smaller = 0;
    for (int v = 1; v < sigma(j); ++v)
      if (!used[static_cast<std::size_t>(v - 1)]) ++smaller;
    rank += smaller * fact;
    used[static_cast<std::size_t>(sigma(j) - 1)] = true;
    if (n - j > 1) fact /= (n - j);
  }
  return static_cast<int>(rank);
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace multicoh

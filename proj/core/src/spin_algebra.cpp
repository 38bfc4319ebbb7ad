#include "rcqm/spin_algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rcqm {

namespace {
const std::complex<double> I{0.0, 1.0};
}

SpinConfig::SpinConfig(std::vector<SpinEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SpinConfig: empty entry list");
  for (const auto& e : entries_)
    if (e.twice_spin < 0) throw std::invalid_argument("SpinConfig: negative spin");
}

SpinConfig SpinConfig::parse(const std::string& text) {
  std::vector<SpinEntry> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("SpinConfig: empty entry");
    tok = tok.substr(b, e - b + 1);
    SpinEntry entry;
    if (!tok.empty() && tok.back() == '-') {
      entry.sector = Sector::antiparticle;
      tok.pop_back();
    }
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
      const int num = std::stoi(tok.substr(0, slash));
      const int den = std::stoi(tok.substr(slash + 1));
      if (den != 2) throw std::invalid_argument("SpinConfig: denominator must be 2");
      entry.twice_spin = num;
    } else {
      entry.twice_spin = 2 * std::stoi(tok);
    }
    if (entry.twice_spin < 0) throw std::invalid_argument("SpinConfig: negative spin");
    entries.push_back(entry);
  }
  return SpinConfig(entries);
}

int SpinConfig::dim() const {
  int n = 0;
  for (const auto& e : entries_) n += e.twice_spin + 1;
  return n;
}

bool SpinConfig::has_antiparticle() const {
  for (const auto& e : entries_)
    if (e.sector == Sector::antiparticle) return true;
  return false;
}

bool SpinConfig::is_paired_doublet() const {
  const size_t n = entries_.size();
  if (n % 2 != 0) return false;
  for (size_t i = 0; i < n / 2; ++i) {
    if (entries_[i].sector != Sector::particle) return false;
    const auto& mirror = entries_[n / 2 + i];
    if (mirror.sector != Sector::antiparticle) return false;
    if (mirror.twice_spin != entries_[i].twice_spin) return false;
  }
  return true;
}

std::string SpinConfig::to_string() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    const int ts = entries_[i].twice_spin;
    if (ts % 2 == 0)
      out += std::to_string(ts / 2);
    else
      out += std::to_string(ts) + "/2";
    if (entries_[i].sector == Sector::antiparticle) out += "-";
  }
  return out;
}

SpinTriple su2_generators(int twice_spin) {
  if (twice_spin < 0) throw std::invalid_argument("su2_generators: twice_spin < 0");
  const int n = twice_spin + 1;
  const double s = 0.5 * twice_spin;
  Mat sp = Mat::Zero(n, n);  // raising operator
  Mat s3 = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double m = s - i;  // eigenvalue of row i
    s3(i, i) = m;
    if (i > 0) {
      // <m+1| S+ |m>, m = s - i
      sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
  }
  const Mat sm = sp.adjoint();
  SpinTriple out;
  out.s[0] = 0.5 * (sp + sm);
  out.s[1] = -0.5 * I * (sp - sm);
  out.s[2] = s3;
  return out;
}

SpinTriple multiplet_spin(const SpinConfig& config) {
  const int n = config.dim();
  SpinTriple out;
  for (auto& m : out.s) m = Mat::Zero(n, n);
  int off = 0;
  for (const auto& e : config.entries()) {
    const SpinTriple block = su2_generators(e.twice_spin);
    const int d = e.twice_spin + 1;
    for (int j = 0; j < 3; ++j) {
      Mat b = block.s[j];
      if (e.sector == Sector::antiparticle) b = -b.conjugate();
      out.s[j].block(off, off, d, d) = b;
    }
    off += d;
  }
  return out;
}

Mat casimir_spin(const SpinTriple& S) {
  return S.s[0] * S.s[0] + S.s[1] * S.s[1] + S.s[2] * S.s[2];
}

Mat casimir_expected(const SpinConfig& config) {
  const int n = config.dim();
  Mat out = Mat::Zero(n, n);
  int off = 0;
  for (const auto& e : config.entries()) {
    const double s = 0.5 * e.twice_spin;
    const int d = e.twice_spin + 1;
    for (int i = 0; i < d; ++i) out(off + i, off + i) = s * (s + 1);
    off += d;
  }
  return out;
}

ChargeSign charge_sign(const SpinConfig& config) {
  const int n = config.dim();
  ChargeSign out;
  out.g = Mat::Zero(n, n);
  out.convention_flag = !config.has_antiparticle();
  int off = 0;
  for (const auto& e : config.entries()) {
    const double v = (e.sector == Sector::antiparticle) ? 1.0 : -1.0;
    const int d = e.twice_spin + 1;
    for (int i = 0; i < d; ++i) out.g(off + i, off + i) = v;
    off += d;
  }
  return out;
}

VerificationReport check_su2(const SpinTriple& S, double tol, const std::string& label) {
  if (tol <= 0) throw std::invalid_argument("check_su2: tol must be positive");
  VerificationReport rep;
  rep.suite = "su2";
  double herm = 0.0;
  for (int j = 0; j < 3; ++j)
    herm = std::max(herm, (S.s[j] - S.s[j].adjoint()).cwiseAbs().maxCoeff());
  rep.add(label + "/hermiticity", "s^j = (s^j)^dag", herm, tol);

  // eps^{jln}: nonzero entries of the Levi-Civita tensor
  static const int eps[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};  // index of n, -1 unused
  static const double sgn[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  double comm = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      Mat lhs = S.s[j] * S.s[l] - S.s[l] * S.s[j];
      if (j != l) lhs -= std::complex<double>(0, sgn[j][l]) * S.s[eps[j][l]];
      comm = std::max(comm, lhs.cwiseAbs().maxCoeff());
    }
  rep.add(label + "/commutators", "[s^j,s^l] = i eps^{jln} s^n", comm, tol);
  return rep;
}

}  // namespace rcqm

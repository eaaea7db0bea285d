#include "render.hpp"

#include <set>
#include <sstream>

namespace npcli {

using npcurve::LPolynomial;
using npcurve::NewtonPolygon;
using npcurve::Rat;

std::string rat_str(const Rat& value) {
  std::ostringstream os;
  os << npcurve::rat_num(value);
  if (npcurve::rat_den(value) != 1) os << "/" << npcurve::rat_den(value);
  return os.str();
}

std::string render_hull(const NewtonPolygon& np) {
  const std::int64_t g = np.g;
  std::set<std::pair<std::int64_t, std::int64_t>> breaks(np.breaks.begin(), np.breaks.end());

  const std::size_t label_width = std::to_string(g).size();
  std::ostringstream os;
  for (std::int64_t row = g; row >= 0; --row) {
    std::string label = std::to_string(row);
    std::string line(label_width - label.size(), ' ');
    line += label + " |";
    for (std::int64_t x = 0; x <= 2 * g; ++x) {
      const Rat y = hull_value(np, Rat(x));
      char c = ' ';
      if (breaks.count({x, row}))
        c = '*';
      else if (npcurve::rat_is_integer(y) && npcurve::rat_num(y) == row)
        c = 'o';
      else if (!npcurve::rat_is_integer(y) && npcurve::rat_floor(y) == row)
        c = '.';
      line += c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  os << std::string(label_width + 1, ' ') << '+' << std::string(std::size_t(2 * g + 1), '-')
     << "\n";
  os << "breaks:";
  for (const auto& [x, y] : np.breaks) os << " (" << x << "," << y << ")";
  os << "\n";
  return os.str();
}

std::string lpoly_pretty(const LPolynomial& L) {
  std::ostringstream os;
  os << L.coeffs[0];
  for (std::size_t i = 1; i < L.coeffs.size(); ++i) {
    const npcurve::BigInt& c = L.coeffs[i];
    if (c == 0) continue;
    os << (c > 0 ? " + " : " - ");
    const npcurve::BigInt a = abs(c);
    if (a != 1) os << a << "*";
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace npcli

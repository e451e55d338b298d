#include "linkcat/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

namespace linkcat {

namespace {

std::string loop_badge(std::uint64_t loops) {
  return "(" + std::to_string(loops) + (loops == 1 ? " loop)" : " loops)");
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool is_straight(const Link& link) {
  return link.left.size() == 1 && link.right.size() == 1 &&
         link.left.front() == link.right.front();
}

}  // namespace

std::string render_ascii(const Linking& l) {
  const std::size_t nx = l.left().size();
  const std::size_t ny = l.right().size();
  std::size_t label_width = 1;
  for (std::size_t i = 0; i < nx; ++i) label_width = std::max(label_width, l.left().label(i).size());
  for (std::size_t j = 0; j < ny; ++j) label_width = std::max(label_width, l.right().label(j).size());
  const std::size_t width = std::max<std::size_t>(4, label_width + 2);
  const std::size_t columns = std::max(nx, ny);
  auto centre = [&](std::size_t c) { return c * width + width / 2; };

  std::vector<const Link*> laned;
  for (const Link& link : l.links()) {
    if (!is_straight(link)) laned.push_back(&link);
  }
  // Row 0 and the last row are spacers; lanes sit in between.
  const std::size_t rows = std::max<std::size_t>(1, laned.size()) + 2;
  std::vector<std::string> grid(rows, std::string(columns * width, ' '));

  auto label_row = [&](const VertexSet& side) {
    std::string row(columns * width, ' ');
    for (std::size_t i = 0; i < side.size(); ++i) {
      const std::string name = side.label(i);
      const std::size_t start = centre(i) - (name.size() - 1) / 2;
      row.replace(start, name.size(), name);
    }
    rtrim(row);
    return row;
  };

  for (std::size_t r = 0; r < laned.size(); ++r) {
    const Link& link = *laned[r];
    std::vector<std::size_t> cols(link.left.begin(), link.left.end());
    cols.insert(cols.end(), link.right.begin(), link.right.end());
    const auto [lo, hi] = std::minmax_element(cols.begin(), cols.end());
    std::string& lane = grid[r + 1];
    for (std::size_t x = centre(*lo); x <= centre(*hi); ++x) lane[x] = '-';
    for (std::size_t c : cols) lane[centre(c)] = cols.size() == 1 ? 'o' : '+';
  }
  auto stroke = [&](std::size_t row, std::size_t col) {
    char& cell = grid[row][centre(col)];
    if (cell == ' ' || cell == '-') cell = '|';
  };
  for (std::size_t r = 0; r < laned.size(); ++r) {
    for (std::size_t x : laned[r]->left) {
      for (std::size_t row = 0; row <= r; ++row) stroke(row, x);
    }
    for (std::size_t y : laned[r]->right) {
      for (std::size_t row = r + 2; row < rows; ++row) stroke(row, y);
    }
  }
  for (const Link& link : l.links()) {
    if (!is_straight(link)) continue;
    for (std::size_t row = 0; row < rows; ++row) stroke(row, link.left.front());
  }

  std::ostringstream out;
  out << label_row(l.left()) << '\n';
  for (std::string& row : grid) {
    rtrim(row);
    out << row << '\n';
  }
  out << label_row(l.right()) << '\n';
  if (l.loops() > 0) out << loop_badge(l.loops()) << '\n';
  return out.str();
}

std::string render_svg(const Linking& l) {
  constexpr int kSpacing = 40;
  constexpr int kMargin = 40;
  constexpr int kTop = 40;
  constexpr int kBottom = 180;
  constexpr int kMiddle = (kTop + kBottom) / 2;
  const std::size_t columns = std::max(l.left().size(), l.right().size());
  const int body = kMargin * 2 + kSpacing * static_cast<int>(columns > 0 ? columns - 1 : 0);
  const int width = body + (l.loops() > 0 ? 80 : 0);
  const int height = kBottom + kTop;
  auto x_of = [&](std::size_t i) { return kMargin + kSpacing * static_cast<int>(i); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n"
      << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";

  struct Foot {
    int x;
    int y;
  };
  for (const Link& link : l.links()) {
    std::vector<Foot> feet;
    for (std::size_t x : link.left) feet.push_back({x_of(x), kTop});
    for (std::size_t y : link.right) feet.push_back({x_of(y), kBottom});
    if (feet.size() == 2) {
      const Foot& a = feet[0];
      const Foot& b = feet[1];
      if (a.y == b.y) {
        const int bulge = a.y == kTop ? 50 : -50;
        out << "<path d=\"M " << a.x << ' ' << a.y << " C " << a.x << ' '
            << a.y + bulge << ", " << b.x << ' ' << b.y + bulge << ", " << b.x
            << ' ' << b.y << "\"/>\n";
      } else {
        out << "<path d=\"M " << a.x << ' ' << a.y << " C " << a.x << ' '
            << kMiddle << ", " << b.x << ' ' << kMiddle << ", " << b.x << ' '
            << b.y << "\"/>\n";
      }
      continue;
    }
    double hub_x = 0;
    for (const Foot& f : feet) hub_x += f.x;
    hub_x /= static_cast<double>(feet.size());
    const int hub_y = link.right.empty() ? kTop + 45
                      : link.left.empty() ? kBottom - 45
                                          : kMiddle;
    for (const Foot& f : feet) {
      out << "<line x1=\"" << hub_x << "\" y1=\"" << hub_y << "\" x2=\"" << f.x
          << "\" y2=\"" << f.y << "\"/>\n";
    }
    out << "<circle cx=\"" << hub_x << "\" cy=\"" << hub_y
        << "\" r=\"5\" fill=\"white\"/>\n";
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (std::size_t i = 0; i < l.left().size(); ++i) {
    out << "<circle cx=\"" << x_of(i) << "\" cy=\"" << kTop << "\" r=\"4\"/>\n";
  }
  for (std::size_t j = 0; j < l.right().size(); ++j) {
    out << "<circle cx=\"" << x_of(j) << "\" cy=\"" << kBottom << "\" r=\"4\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < l.left().size(); ++i) {
    out << "<text x=\"" << x_of(i) << "\" y=\"" << kTop - 12 << "\">"
        << xml_escape(l.left().label(i)) << "</text>\n";
  }
  for (std::size_t j = 0; j < l.right().size(); ++j) {
    out << "<text x=\"" << x_of(j) << "\" y=\"" << kBottom + 22 << "\">"
        << xml_escape(l.right().label(j)) << "</text>\n";
  }
  if (l.loops() > 0) {
    const int cx = body + 30;
    out << "<circle cx=\"" << cx << "\" cy=\"" << kMiddle
        << "\" r=\"14\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << cx << "\" y=\"" << kMiddle + 34 << "\">"
        << loop_badge(l.loops()) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace linkcat

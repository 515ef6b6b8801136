#include "pmm/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pmm {

namespace {

constexpr int kColumn = 48;
constexpr int kRow = 28;
constexpr int kMargin = 40;
constexpr int kBandGap = 24;
constexpr int kGap = 7;  // half-length of the break in an under-strand

std::string svg_open(int width, int height) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"12\">\n"
    << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  return o.str();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Step {
  bool is_e = false;
  int index = 0;  // s_i
  int sign = 1;
  std::string label;
  std::vector<int> pos_before;  // pos_before[strand] = position, strands 1-based
  std::vector<int> pos_after;
  std::vector<int> group_after;  // band lineage id per strand after the step
};

void line(std::ostringstream& o, int x1, int y1, int x2, int y2, bool ghost) {
  o << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << '"'
    << (ghost ? " stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\"" : " stroke=\"black\"")
    << " stroke-width=\"2\"/>\n";
}

// Segment from (x1, y1) to (x2, y2) with its middle part removed.
void broken_line(std::ostringstream& o, int x1, int y1, int x2, int y2, bool ghost) {
  const int xm = (x1 + x2) / 2, ym = (y1 + y2) / 2;
  const int dy = y2 > y1 ? kGap : -kGap;
  line(o, x1, y1, xm - kGap, ym - dy, ghost);
  line(o, xm + kGap, ym + dy, x2, y2, ghost);
}

}  // namespace

std::string word_diagram_svg(const BraidWord& w, int n) {
  for (const auto& g : w) validate_generator(g, n);
  const auto phi = phi_word(w, n);

  // Replay the word from its first-acting (rightmost) letter.
  std::vector<int> pos(static_cast<std::size_t>(n + 1)), group(static_cast<std::size_t>(n + 1), 0);
  for (int l = 1; l <= n; ++l) pos[static_cast<std::size_t>(l)] = l;
  std::vector<Step> steps;
  int next_group = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Step st;
    st.is_e = it->kind == BraidGenerator::Kind::E;
    st.index = it->index;
    st.sign = it->sign;
    st.label = to_string(*it);
    st.pos_before = pos;
    if (st.is_e) {
      const auto blocks = OrderedSetPartition::standard(it->cuts);
      std::map<std::pair<int, int>, int> fresh;
      for (int l = 1; l <= n; ++l) {
        const auto key = std::make_pair(group[static_cast<std::size_t>(l)],
                                        blocks.block_of(pos[static_cast<std::size_t>(l)]));
        auto [slot, inserted] = fresh.emplace(key, next_group);
        if (inserted) ++next_group;
        group[static_cast<std::size_t>(l)] = slot->second;
      }
    } else {
      for (int l = 1; l <= n; ++l) {
        auto& p = pos[static_cast<std::size_t>(l)];
        if (p == st.index) p = st.index + 1;
        else if (p == st.index + 1) p = st.index;
      }
    }
    st.pos_after = pos;
    st.group_after = group;
    steps.push_back(std::move(st));
  }

  const int columns = std::max<int>(1, static_cast<int>(steps.size()));
  const int band_height = (n + 1) * kRow;
  const int bands = static_cast<int>(phi.layers().size());
  const int width = 2 * kMargin + columns * kColumn;
  const int height = kMargin + bands * band_height + (bands - 1) * kBandGap + kMargin / 2;

  std::ostringstream o;
  o << svg_open(width, height);
  for (int c = 0; c < static_cast<int>(steps.size()); ++c)
    o << "<text x=\"" << kMargin + c * kColumn + kColumn / 2 << "\" y=\"" << kMargin - 12
      << "\" text-anchor=\"middle\">" << escape(steps[static_cast<std::size_t>(c)].label) << "</text>\n";

  for (int b = 0; b < bands; ++b) {
    const auto& layer = phi.layers()[static_cast<std::size_t>(b)];
    const int top = kMargin + b * (band_height + kBandGap);
    const int member = layer.domain.front();
    auto y = [&](int p) { return top + p * kRow; };
    auto x = [&](int c) { return kMargin + c * kColumn; };

    o << "<g class=\"band\" data-layer=\"" << b + 1 << "\" data-strands=\"" << join(layer.domain) << "\">\n";
    o << "<rect x=\"" << kMargin / 2 << "\" y=\"" << top << "\" width=\"" << width - kMargin << "\" height=\""
      << band_height << "\" fill=\"#f4f6fa\" stroke=\"#667\" stroke-width=\"1\"/>\n";
    o << "<text x=\"" << kMargin / 2 + 4 << "\" y=\"" << top + 12 << "\">layer " << b + 1 << "</text>\n";

    // A strand is drawn in this band while it shares the band's lineage.
    auto shares = [&](int l, std::size_t step_index) {
      const auto& g = step_index == 0 ? std::vector<int>(static_cast<std::size_t>(n + 1), 0)
                                      : steps[step_index - 1].group_after;
      return g[static_cast<std::size_t>(l)] == g[static_cast<std::size_t>(member)];
    };
    auto in_layer = [&](int l) {
      return std::find(layer.domain.begin(), layer.domain.end(), l) != layer.domain.end();
    };

    if (steps.empty()) {
      for (int l = 1; l <= n; ++l) line(o, x(0), y(l), x(1), y(l), !in_layer(l));
    }
    for (std::size_t c = 0; c < steps.size(); ++c) {
      const auto& st = steps[c];
      const int x1 = x(static_cast<int>(c)), x2 = x(static_cast<int>(c) + 1);
      if (st.is_e) {
        o << "<line x1=\"" << (x1 + x2) / 2 << "\" y1=\"" << top + 4 << "\" x2=\"" << (x1 + x2) / 2 << "\" y2=\""
          << top + band_height - 4 << "\" stroke=\"#c66\" stroke-width=\"1\" stroke-dasharray=\"2 2\"/>\n";
      }
      int over = 0, under = 0;
      if (!st.is_e) {
        for (int l = 1; l <= n; ++l) {
          if (st.pos_before[static_cast<std::size_t>(l)] == st.index) (st.sign > 0 ? over : under) = l;
          if (st.pos_before[static_cast<std::size_t>(l)] == st.index + 1) (st.sign > 0 ? under : over) = l;
        }
        if (shares(over, c) && shares(under, c))
          o << "<g class=\"crossing\" data-column=\"" << c + 1 << "\" data-over=\"" << over << "\" data-under=\""
            << under << "\"/>\n";
      }
      for (int l = 1; l <= n; ++l) {
        if (!shares(l, c)) continue;
        const bool ghost = !in_layer(l);
        const int ya = y(st.pos_before[static_cast<std::size_t>(l)]);
        const int yb = y(st.pos_after[static_cast<std::size_t>(l)]);
        if (st.is_e && !shares(l, c + 1)) {
          line(o, x1, ya, (x1 + x2) / 2, ya, ghost);
          o << "<circle cx=\"" << (x1 + x2) / 2 << "\" cy=\"" << ya << "\" r=\"3\" fill=\"#aaaaaa\"/>\n";
        } else if (l == under && shares(over, c)) {
          broken_line(o, x1, ya, x2, yb, ghost);
        } else {
          line(o, x1, ya, x2, yb, ghost);
        }
      }
    }
    for (int p = 1; p <= n; ++p) {
      o << "<circle cx=\"" << x(0) << "\" cy=\"" << y(p) << "\" r=\"2\" fill=\"#334\"/>\n";
      o << "<circle cx=\"" << x(columns) << "\" cy=\"" << y(p) << "\" r=\"2\" fill=\"#334\"/>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string layered_diagram_svg(const LayeredAut& f) {
  const int n = f.size();
  const int bands = static_cast<int>(f.layers().size());
  const int band_height = (n + 1) * kRow;
  const int width = 2 * kMargin + 4 * kColumn;
  const int height = kMargin / 2 + bands * band_height + (bands - 1) * kBandGap + kMargin / 2;
  std::ostringstream o;
  o << svg_open(width, height);
  for (int b = 0; b < bands; ++b) {
    const auto& layer = f.layers()[static_cast<std::size_t>(b)];
    const int top = kMargin / 2 + b * (band_height + kBandGap);
    o << "<g class=\"band\" data-layer=\"" << b + 1 << "\" data-strands=\"" << join(layer.domain) << "\">\n";
    o << "<rect x=\"" << kMargin / 2 << "\" y=\"" << top << "\" width=\"" << width - kMargin << "\" height=\""
      << band_height << "\" fill=\"#f4f6fa\" stroke=\"#667\" stroke-width=\"1\"/>\n";
    o << "<text x=\"" << kMargin / 2 + 4 << "\" y=\"" << top + 12 << "\">layer " << b + 1 << "</text>\n";
    for (std::size_t k = 0; k < layer.domain.size(); ++k) {
      const int ya = top + layer.domain[k] * kRow, yb = top + layer.target[k] * kRow;
      line(o, kMargin, ya, kMargin + 2 * kColumn, yb, false);
      o << "<text x=\"" << kMargin + 2 * kColumn + 8 << "\" y=\"" << yb + 4 << "\">x" << layer.target[k];
      if (!layer.conjugator[k].empty()) o << " ^ (" << escape(to_string(layer.conjugator[k])) << ')';
      o << "</text>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace pmm

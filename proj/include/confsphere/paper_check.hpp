#ifndef CONFSPHERE_PAPER_CHECK_HPP
#define CONFSPHERE_PAPER_CHECK_HPP

#include <string>
#include <vector>

namespace confsphere {

struct PaperCheckItem {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
    int criterion = 0;  // acceptance criterion this item belongs to
};

// The hard-coded reproduction suite: every published value the tool must
// reproduce exactly (mod-3 mapping-space dimensions and action ranks, the
// rational section/mapping space components over S0 v S0, the char-2
// section/mapping agreement, and the CP^2 configuration/mapping comparison).
std::vector<PaperCheckItem> run_paper_checks();

}  // namespace confsphere

#endif

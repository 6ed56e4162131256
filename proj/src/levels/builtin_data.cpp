#include "egogrid/levels.hpp"

// Bundled level text. Train levels for every game plus the fixed Zelda test
// set. One string per level; rows newline-separated, same alphabet as level
// files (docs/level_format.md).

namespace egogrid::builtin {

extern const char* const kZeldaTrain[] = {
    R"(wwwwwwwwwwwww
w.........e.w
w.A..w......w
w....w...w..w
w..www...w..w
w........w+.w
w..e........w
w.g.....w...w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..w......+.w
w..w..ww....w
w......w..e.w
wA..w..w....w
w...w.......w
www.w..www..w
w......w...gw
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
wg.w........w
w..w.....w..w
w..w..A..w..w
w..w..w..w..w
w.....w..w.ew
w..w..w.....w
w+.w..w...e.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...w....e..w
w.w.w.ww....w
w.w......ww.w
w.w.ww......w
w.....w.....w
w.ww..w...w.w
wA.+..w..g..w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w......w...gw
w.ww...w.w..w
w......w.w..w
w.w.w....w.ew
w.w.wwww.w..w
w.w....w.w..w
w.A.+..w..e.w
wwwwwwwwwwwww)",
};
extern const int kZeldaTrainCount = 5;

extern const char* const kBoulderdashTrain[] = {
    R"(wwwwwwwwwwwww
wA....x..o..w
w.o.x....x..w
w..x...o...xw
w.....w..x..w
wx..o....x..w
w..x...-e-..w
w.x...x....gw
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..x....x...w
w.o..w....o.w
wx...w.x...xw
w..o.w..x...w
w.x....-e-.xw
wx...o...w..w
wg....x..x.Aw
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
wx..o...x..gw
w...w..o...xw
w.x..x...x..w
w....-e-....w
w.x......x.ow
w...x..w....w
wA.x.....x..w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....x...x..w
wox......o.xw
w..w.x.w....w
w.x...A...x.w
w.-e-w...w..w
wxo....x...xw
w.g..x....x.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
wgw..x...x.xw
w.w...o.....w
w.w.x...x...w
w...o..w..x.w
w.x...x...o.w
w....-e-.x..w
wA..x.....xww
wwwwwwwwwwwww)",
};
extern const int kBoulderdashTrainCount = 5;

extern const char* const kDSolarfoxTrain[] = {
    R"(wwwwwwwwwwwww
w...........w
w..x..x..x..w
w...........w
w..x..A..x..w
w...........w
w..x..x..x..w
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.e.......e.w
w....x.x....w
w..x.....x..w
w.....A.....w
w..x.....x..w
w....x.x....w
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...........w
w.xxx...xxx.w
w...........w
w.....A.....w
w...........w
w.xxx...xxx.w
w.....e.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.x.......x.w
w...x...x...w
w.....x.....w
w..A.....e..w
w.....x.....w
w...x...x...w
w.x.......x.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..x..x..x..w
w...........w
w.e.........w
w......A....w
w.........e.w
w...........w
w..x..x..x..w
wwwwwwwwwwwww)",
};
extern const int kDSolarfoxTrainCount = 5;

extern const char* const kZeldaTest[] = {
    R"(wwwwwwwwwwwww
w.......g...w
w.........e.w
w.e......wwww
w.+.........w
w....e.....ww
w..w........w
w.Aw.......ww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..........ww
w........e..w
w..A........w
w...wwwwwww.w
w......+..w.w
w.........w.w
wg..e.....w.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.......wwwww
we.....ww.w.w
w....g.we...w
we.....w....w
w....+.w....w
w..........Aw
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w......+.e..w
w.we........w
w.w........ww
w..........ww
w......A....w
w.www....wwww
wg..........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....wwwwA.ww
w...+.w....ww
ww....w....ww
ww...www...ww
w...........w
w.....g....ew
w......e.w..w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.wwww.....ww
we..+....w.ww
w......g.w..w
w.w...e.....w
w.w...w.....w
w.....w....ww
w...A.w....ww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...e.+.....w
w..wwww.....w
w.....w.g...w
w...........w
we....A.w.www
w.......w...w
w.......w...w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...........w
w.g.........w
w..e.......ww
www....+..Aww
w...ee......w
w......w....w
w...wwww.wwww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...........w
w...e..w.wwww
w....w.w....w
w...ww.w...Aw
w...w.....www
w...w..g.e.ww
w.+..e...ww.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...........w
w...e.......w
www...g.....w
w.A.........w
w....+......w
w...e..wwwwww
wwwww...w...w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..wwww....ew
w...A.......w
w........e..w
w.........eww
w..........ww
w....gwwww..w
w+....w.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...........w
w......wwww.w
w.........www
w.A...e.....w
w.......g...w
w........wwww
w.....e.+wwww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.....w...g.w
w.....w.....w
w..w..w...www
we.w+.......w
w.......e...w
w....A..w...w
w.......w.e.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..........ww
ww.........ww
ww....e+....w
w...wwew....w
wA....gw....w
w...e..w....w
w......w....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.A.....wwwww
w....www....w
wg..........w
wwwww......ew
w+...e.wwww.w
w...........w
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.........e.w
ww.ww.g...w.w
wwe.......www
ww......A.w.w
ww..wwww..w.w
w+.e......www
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...e....wwww
www.........w
w...........w
wwwww...+..gw
w.....A..ww.w
w.e.........w
we.ww.......w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...+..e....w
wge.....wwwww
w.....www...w
w...........w
w..w........w
w..w........w
w..w...A....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w........wwww
w..........ww
w...ww+....ww
w.e........ww
w...e.....Agw
w.....w....ww
w.....w.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.ww......+.w
wwwwwww.e.g.w
wwww......www
ww......w...w
w......Aw...w
w.......w...w
w.......w..ew
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..e........w
wg..........w
w...........w
w.wwww..A...w
w.......w...w
ww....e.w...w
ww.+....wwwww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
we.w....A..+w
w.www....w..w
w.ew..ew.w..w
w....w.wwww.w
w....w...w..w
wg..........w
w......w....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...w.w.....w
w.w.wwww....w
w.wwwew...A.w
w.www.w.....w
wwww....e...w
ww.w....g...w
ww...w.....+w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w........wwww
w.w...w....ww
wgw...w+...ww
w.w...w....ww
w.w...w.....w
w.A...e.....w
w....e......w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...wwwww...w
w...........w
ww.......e..w
ww.........ww
wew..g+.e..ww
w.w........ww
w...A.......w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w..........ew
w.....e.....w
w...........w
w...g.....+.w
w..Awwww....w
w...w.......w
www.w...wwwww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.......w...w
w.+.....w...w
w.........www
w.....e.....w
w........e..w
w..........ww
wA......g..ww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...g.....e.w
w..+........w
w..e......www
ww..www.....w
ww.....A....w
w......w...ww
w......ww...w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.+.........w
w......www..w
w..A.wwee...w
w.ww.....w..w
w.....wg.ww.w
w.....w..wwww
w......e..www
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
wg...wwww...w
w....ww.w.+.w
we...ww.w...w
w....ww..A..w
ww...ww.....w
wwww........w
ww......e...w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....e......w
w...........w
w.wwww..g...w
w..A....+...w
w.....w.....w
w.....ww.e..w
w.....ww.ww.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.g.........w
w..w........w
w.Aw..www...w
w.ww.w.w....w
w.ww.w.w....w
w+w...ew....w
w.....e.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.....A.w...w
w.......w...w
w.g.wwww....w
w.........e+w
w..e......w.w
w........ww.w
w..e.....ww.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....e......w
w..+.....ww.w
w.wwg.....e.w
w......A....w
we..........w
w...........w
w..wwwwwww..w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....g......w
we.wwww.....w
w...........w
w...Aww..e..w
w....wwww...w
w....ww..ww.w
w+....w.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.e.....e...w
w.....e.....w
w........g..w
w......+..w.w
w.www..w..w.w
wA.....w..w.w
w......w....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....A...+..w
w.....w.....w
w.....w.eg.ew
w.....w.....w
w.....w....ww
w..........ww
w.....w....ww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
we..........w
w...........w
w.....e+...ww
w...w......ew
w...wwww....w
w...w.wwww..w
wAg.w.w.....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...+....e..w
w..wwwwwwg..w
w.......wwe.w
w.......ww..w
w.A.....ww..w
w......e....w
w.www.......w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
www..+......w
w...........w
w.A.wwww....w
w........wwww
w..wwww....ww
w.....e...eww
w...g......ww
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...ewwww.www
w.w+.e...wwww
w.w.w.......w
w.wgw.......w
w.wew...A...w
w...........w
w...........w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w.....e.....w
w..w........w
w..w..e....Aw
w..w........w
w..w..g.....w
w..+e.......w
w...w.wwwww.w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....ww+....w
w..ww.ww....w
w....eww...ew
w......wA...w
w...g..w....w
w...........w
w...wwww....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w...w.www...w
w...we......w
w+..wwwwwAw.w
w.......w.w.w
w.......w.w.w
w..g....w...w
w......e....w
wwwwwwwwwwwww)",
    R"(wwwwwwwwwwwww
w....wwwww..w
wA...w..wwwww
w....w..w...w
w.........e.w
w..w..+ee...w
w..w....w...w
w..w...gw...w
wwwwwwwwwwwww)",
};
extern const int kZeldaTestCount = 45;

}  // namespace egogrid::builtin

// Reference thresholds, circulant rows and listed triples, machine-transcribed.

#include "reference_data.hpp"

namespace dtc::reference::data {

const std::vector<Threshold> kThresholds = {
    {2, 5, 30}, {2, 6, 40}, {2, 7, 48}, {2, 8, 56}, {2, 9, 66}, {2, 10, 74},
    {3, 5, 20}, {3, 6, 26}, {3, 7, 32}, {3, 8, 38}, {3, 9, 44}, {3, 10, 50},
    {4, 5, 16}, {4, 6, 22}, {4, 7, 26}, {4, 8, 32}, {4, 9, 38}, {4, 10, 42},
    {2, 11, 84}, {2, 12, 92}, {2, 13, 102}, {2, 14, 110}, {2, 15, 120}, {2, 16, 128}, {2, 17, 138}, {2, 18, 146},
    {2, 19, 156}, {2, 20, 164}, {2, 21, 172}, {2, 22, 182}, {2, 23, 190}, {2, 24, 200}, {2, 25, 208}, {2, 26, 218},
    {2, 27, 226}, {2, 28, 236}, {2, 29, 244}, {2, 30, 254}, {2, 31, 264}, {2, 32, 272}, {2, 33, 282}, {2, 34, 290},
    {2, 35, 300}, {2, 36, 308}, {2, 37, 318}, {2, 38, 326}, {2, 39, 336}, {2, 40, 344}, {2, 41, 354}, {2, 42, 362},
    {2, 43, 372}, {2, 44, 380}, {2, 45, 390}, {2, 46, 398}, {2, 47, 408}, {2, 48, 416}, {2, 49, 426}, {2, 50, 434},
    {3, 11, 56}, {3, 12, 62}, {3, 13, 68}, {3, 14, 76}, {3, 15, 82}, {3, 16, 88}, {3, 17, 94}, {3, 18, 100},
    {3, 19, 106}, {3, 20, 112}, {3, 21, 118}, {3, 22, 124}, {3, 23, 130}, {3, 24, 138}, {3, 25, 144}, {3, 26, 150},
    {3, 27, 156}, {3, 28, 162}, {3, 29, 168}, {3, 30, 174}, {3, 31, 180}, {3, 32, 186}, {3, 33, 194}, {3, 34, 200},
    {3, 35, 206}, {3, 36, 212}, {3, 37, 218}, {3, 38, 224}, {3, 39, 230}, {3, 40, 236}, {3, 41, 244}, {3, 42, 250},
    {3, 43, 256}, {3, 44, 262}, {3, 45, 268}, {3, 46, 274}, {3, 47, 280}, {3, 48, 286}, {3, 49, 294}, {3, 50, 300},
    {4, 11, 48}, {4, 12, 52}, {4, 13, 58}, {4, 14, 64}, {4, 15, 68}, {4, 16, 74}, {4, 17, 78}, {4, 18, 84},
    {4, 19, 90}, {4, 20, 94}, {4, 21, 100}, {4, 22, 104}, {4, 23, 110}, {4, 24, 116}, {4, 25, 120}, {4, 26, 126},
    {4, 27, 132}, {4, 28, 136}, {4, 29, 142}, {4, 30, 146}, {4, 31, 152}, {4, 32, 158}, {4, 33, 162}, {4, 34, 168},
    {4, 35, 174}, {4, 36, 178}, {4, 37, 184}, {4, 38, 188}, {4, 39, 194}, {4, 40, 200}, {4, 41, 204}, {4, 42, 210},
    {4, 43, 216}, {4, 44, 220}, {4, 45, 226}, {4, 46, 230}, {4, 47, 236}, {4, 48, 242}, {4, 49, 246}, {4, 50, 252},
};

const std::vector<CirculantRow> kBinaryCirculant = {
    {4, "(1,0)"},
    {32, "(1,1,1,1,1,0,1,0,0,1,0,0,0,0,0,0)"},
    {4, "(1,1)"},
    {32, "(1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0)"},
    {6, "(1,1,0)"},
    {32, "(1,1,1,0,1,1,0,1,0,1,0,0,0,0,0,0)"},
    {8, "(1,1,1,0)"},
    {32, "(1,1,1,1,0,0,1,1,0,1,0,0,0,0,0,0)"},
    {10, "(1,1,1,0,0)"},
    {32, "(1,1,1,0,1,0,1,1,0,1,0,0,0,0,0,0)"},
    {10, "(1,1,1,1,0)"},
    {32, "(1,0,1,1,1,0,1,1,0,1,0,0,0,0,0,0)"},
    {12, "(1,1,1,0,0,0)"},
    {32, "(1,1,0,0,1,1,1,1,0,1,0,0,0,0,0,0)"},
    {12, "(1,1,0,1,0,0)"},
    {32, "(1,1,0,1,1,1,0,0,1,1,0,0,0,0,0,0)"},
    {12, "(1,1,1,0,1,0)"},
    {32, "(1,1,1,1,1,0,1,0,0,0,1,0,0,0,0,0)"},
    {12, "(1,1,1,1,1,0)"},
    {32, "(1,1,0,1,1,1,1,0,0,0,1,0,0,0,0,0)"},
    {14, "(1,1,1,0,0,0,0)"},
    {32, "(1,1,0,1,0,1,1,1,0,0,1,0,0,0,0,0)"},
    {14, "(1,1,0,1,0,0,0)"},
    {32, "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0,0)"},
    {14, "(1,1,1,1,0,0,0)"},
    {32, "(1,0,0,1,1,1,1,1,0,0,1,0,0,0,0,0)"},
    {14, "(1,1,1,1,1,1,0)"},
    {32, "(1,1,1,1,0,1,0,0,1,0,1,0,0,0,0,0)"},
    {16, "(1,1,1,0,1,0,0,0)"},
    {32, "(1,1,0,0,1,1,1,0,1,0,1,0,0,0,0,0)"},
    {18, "(1,1,1,1,0,0,1,0,0)"},
    {32, "(1,1,1,1,0,0,0,1,1,0,1,0,0,0,0,0)"},
    {20, "(1,1,1,1,0,1,0,0,0,0)"},
    {32, "(1,1,1,0,0,1,0,1,1,0,1,0,0,0,0,0)"},
    {20, "(1,1,1,0,1,1,0,0,0,0)"},
    {32, "(1,0,1,1,0,1,0,1,1,0,1,0,0,0,0,0)"},
    {20, "(1,1,1,1,1,0,0,1,0,0)"},
    {32, "(1,1,1,0,1,1,1,1,1,0,1,0,0,0,0,0)"},
    {22, "(1,1,1,0,1,1,0,1,0,0,0)"},
    {32, "(1,1,1,0,0,1,1,0,0,1,1,0,0,0,0,0)"},
    {24, "(1,1,0,1,1,1,1,0,1,0,0,0)"},
    {32, "(1,1,1,1,1,0,1,1,0,1,1,0,0,0,0,0)"},
    {26, "(1,1,0,1,0,1,0,1,1,0,0,0,0)"},
    {32, "(1,0,0,1,1,1,1,1,1,0,0,1,0,0,0,0)"},
    {28, "(1,1,1,0,1,0,1,1,1,0,0,0,0,0)"},
    {32, "(1,1,1,1,0,1,1,0,1,1,0,1,0,0,0,0)"},
    {30, "(1,1,1,0,1,1,1,0,0,0,1,0,0,0,0)"},
    {32, "(1,1,1,0,1,1,0,1,1,1,0,1,0,0,0,0)"},
    {30, "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0)"},
    {32, "(1,0,1,1,1,1,0,1,1,1,0,1,0,0,0,0)"},
    {30, "(1,1,0,1,0,1,0,1,1,0,1,0,0,0,0)"},
    {32, "(1,1,0,1,1,0,1,1,1,1,0,1,0,0,0,0)"},
    {30, "(1,1,0,0,1,0,1,1,1,0,1,0,0,0,0)"},
    {32, "(1,1,1,1,1,1,0,0,1,0,1,1,0,0,0,0)"},
    {30, "(1,1,1,1,0,1,1,1,1,1,1,0,1,0,0)"},
    {32, "(1,1,1,1,1,0,0,0,1,0,0,0,1,0,0,0)"},
    {32, "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0)"},
    {32, "(1,1,1,1,1,1,0,0,1,1,0,0,1,0,0,0)"},
};

const std::vector<CirculantRow> kTernaryCirculant = {
    {16, "(1,2,2,1,1,0,0,0)"},
    {18, "(1,1,2,1,2,2,0,0,0)"},
    {18, "(1,2,2,2,2,2,1,0,0)"},
    {16, "(1,1,1,1,0,1,0,0)"},
    {18, "(1,1,1,1,0,0,1,0,0)"},
    {18, "(1,2,1,2,1,0,2,0,0)"},
    {16, "(1,1,2,2,0,1,0,0)"},
    {18, "(1,2,1,1,0,0,1,0,0)"},
    {18, "(1,2,2,2,1,0,2,0,0)"},
    {16, "(1,2,1,1,1,1,0,0)"},
    {18, "(1,2,2,1,0,0,1,0,0)"},
    {18, "(1,1,1,2,2,0,2,0,0)"},
    {16, "(1,2,2,2,2,1,0,0)"},
    {18, "(1,1,1,2,0,0,1,0,0)"},
    {18, "(1,2,2,2,2,0,2,0,0)"},
    {16, "(1,1,2,0,1,0,1,0)"},
    {18, "(1,2,1,2,0,0,1,0,0)"},
    {18, "(1,2,2,1,1,1,2,0,0)"},
    {16, "(1,1,2,1,1,0,1,0)"},
    {18, "(1,1,2,2,0,0,1,0,0)"},
    {18, "(1,1,1,2,1,1,2,0,0)"},
    {18, "(1,2,1,1,1,0,0,0,0)"},
    {18, "(1,2,2,2,0,0,1,0,0)"},
    {18, "(1,1,1,1,2,1,2,0,0)"},
    {18, "(1,1,2,1,1,0,0,0,0)"},
    {18, "(1,1,1,1,1,0,1,0,0)"},
    {18, "(1,1,2,1,1,2,2,0,0)"},
    {18, "(1,2,2,1,1,0,0,0,0)"},
    {18, "(1,2,2,1,1,0,1,0,0)"},
    {18, "(1,2,1,2,1,0,1,1,0)"},
    {18, "(1,2,2,2,1,0,0,0,0)"},
    {18, "(1,1,0,2,1,0,1,0,0)"},
    {18, "(1,1,1,2,2,0,1,1,0)"},
    {18, "(1,1,1,1,0,1,0,0,0)"},
    {18, "(1,0,1,2,1,0,1,0,0)"},
    {18, "(1,2,1,2,2,0,1,1,0)"},
    {18, "(1,2,1,1,0,1,0,0,0)"},
    {18, "(1,1,2,2,1,0,1,0,0)"},
    {18, "(1,2,1,2,2,1,1,1,0)"},
    {18, "(1,1,2,1,0,1,0,0,0)"},
    {18, "(1,2,2,2,1,0,1,0,0)"},
    {18, "(1,2,2,2,1,2,1,1,0)"},
    {18, "(1,2,2,1,0,1,0,0,0)"},
    {18, "(1,2,0,2,2,0,1,0,0)"},
    {18, "(1,2,2,1,2,2,1,1,0)"},
    {18, "(1,2,1,2,0,1,0,0,0)"},
    {18, "(1,2,1,1,1,1,1,0,0)"},
    {18, "(1,2,1,2,2,2,1,1,0)"},
    {18, "(1,2,2,2,0,1,0,0,0)"},
    {18, "(1,1,2,1,1,1,1,0,0)"},
    {20, "(1,2,1,1,0,1,1,0,0,0)"},
    {18, "(1,2,2,0,1,1,0,0,0)"},
    {18, "(1,2,1,2,1,1,1,0,0)"},
    {20, "(1,1,1,0,1,1,2,0,0,0)"},
    {18, "(1,2,0,1,1,1,0,0,0)"},
    {18, "(1,1,2,2,1,1,1,0,0)"},
    {20, "(1,1,1,0,2,1,2,0,0,0)"},
    {18, "(1,2,1,1,1,1,0,0,0)"},
    {18, "(1,2,1,1,2,1,1,0,0)"},
    {20, "(1,0,2,1,2,1,0,1,0,0)"},
    {18, "(1,1,2,1,1,1,0,0,0)"},
    {18, "(1,2,2,2,2,1,1,0,0)"},
    {20, "(1,2,2,1,2,0,1,0,1,0)"},
    {18, "(1,1,2,2,1,1,0,0,0)"},
    {18, "(1,2,1,2,0,2,1,0,0)"},
    {22, "(1,1,1,2,1,2,0,0,1,0,0)"},
    {18, "(1,2,1,0,2,1,0,0,0)"},
    {18, "(1,2,2,2,1,2,1,0,0)"},
    {22, "(1,2,1,1,1,2,2,2,1,2,0)"},
    {18, "(1,2,2,1,1,2,0,0,0)"},
    {18, "(1,2,2,1,2,2,1,0,0)"},
};

const std::vector<CirculantRow> kTernaryNegacirculant = {
    {4, "(1,1)"},
    {20, "(1,2,2,2,0,1,1,0,0,0)"},
    {12, "(1,2,1,1,1,0)"},
    {20, "(1,2,2,2,0,1,2,0,0,0)"},
    {16, "(1,1,2,1,1,0,0,0)"},
    {20, "(1,2,1,0,1,1,2,0,0,0)"},
    {16, "(1,2,2,1,1,0,0,0)"},
    {20, "(1,1,1,2,1,0,0,1,0,0)"},
    {16, "(1,2,1,2,0,1,0,0)"},
    {20, "(1,0,1,2,2,1,0,1,0,0)"},
    {16, "(1,1,1,0,1,1,0,0)"},
    {20, "(1,2,2,2,2,1,0,1,0,0)"},
    {16, "(1,2,2,2,1,1,0,0)"},
    {20, "(1,0,2,2,2,2,0,1,0,0)"},
    {20, "(1,1,2,1,1,0,1,0,0,0)"},
    {20, "(1,1,2,2,0,1,1,1,0,0)"},
    {20, "(1,2,1,1,0,1,1,0,0,0)"},
    {24, "(1,1,1,1,2,2,0,1,0,1,0,0)"},
    {20, "(1,1,1,2,0,1,1,0,0,0)"},
    {24, "(1,1,1,1,2,2,1,1,2,1,2,0)"},
};

const std::vector<CirculantRow> kQuaternaryCirculant = {
    {4, "(1,w)"},
    {14, "(1,w,v,w,1,1,1)"},
    {6, "(1,w,1)"},
    {14, "(1,v,w,v,1,1,1)"},
    {8, "(1,1,1,0)"},
    {14, "(1,w,1,1,1,0,0)"},
    {8, "(1,w,1,0)"},
    {14, "(1,v,1,1,1,0,0)"},
    {8, "(1,1,w,0)"},
    {14, "(1,1,w,1,1,0,0)"},
    {8, "(1,v,w,0)"},
    {14, "(1,w,w,1,1,0,0)"},
    {8, "(1,w,1,1)"},
    {14, "(1,1,v,1,1,0,0)"},
    {8, "(1,w,w,1)"},
    {14, "(1,v,1,w,1,0,0)"},
    {10, "(1,w,1,w,0)"},
    {14, "(1,w,v,w,1,0,0)"},
    {10, "(1,v,1,w,0)"},
    {14, "(1,v,1,1,w,0,0)"},
    {12, "(1,w,1,1,0,0)"},
    {14, "(1,v,v,1,w,0,0)"},
    {12, "(1,v,1,1,0,0)"},
    {14, "(1,v,1,w,w,0,0)"},
    {12, "(1,1,1,w,0,0)"},
    {14, "(1,1,w,v,w,0,0)"},
    {12, "(1,1,w,0,1,0)"},
    {14, "(1,w,w,v,w,0,0)"},
    {12, "(1,v,w,0,1,0)"},
    {14, "(1,v,v,v,w,0,0)"},
    {12, "(1,1,v,0,1,0)"},
    {14, "(1,v,w,1,1,1,0)"},
    {12, "(1,w,w,1,1,0)"},
    {14, "(1,v,1,w,1,1,0)"},
    {12, "(1,v,w,1,1,0)"},
    {14, "(1,w,1,v,1,1,0)"},
    {12, "(1,w,v,1,1,0)"},
    {14, "(1,1,w,1,w,w,0)"},
    {12, "(1,v,v,1,1,0)"},
    {12, "(1,v,w,w,1,0)"},
    {12, "(1,v,w,1,1,1)"},
    {18, "(1,v,1,w,1,0,1,0,0)"},
    {12, "(1,w,v,w,1,1)"},
    {18, "(1,1,v,w,1,0,1,0,0)"},
    {18, "(1,1,w,v,1,0,1,0,0)"},
    {18, "(1,v,w,w,0,1,1,0,0)"},
    {18, "(1,v,v,w,0,1,1,0,0)"},
    {18, "(1,v,w,w,1,0,w,0,0)"},
    {18, "(1,1,v,1,1,1,w,0,0)"},
    {18, "(1,w,1,w,1,1,w,0,0)"},
    {18, "(1,v,1,w,1,1,w,0,0)"},
    {18, "(1,v,0,1,w,1,w,0,0)"},
    {18, "(1,w,w,1,w,1,w,0,0)"},
    {18, "(1,v,v,w,1,1,1,1,0)"},
    {18, "(1,1,v,v,w,1,1,1,0)"},
    {18, "(1,w,w,w,1,w,1,1,0)"},
    {18, "(1,w,w,v,w,w,1,1,0)"},
    {20, "(1,v,1,1,w,w,v,w,0,0)"},
    {20, "(1,w,v,0,v,w,1,0,1,0)"},
    {20, "(1,w,v,w,w,w,v,w,1,0)"},
    {20, "(1,v,w,v,w,v,1,0,w,0)"},
};

const std::vector<std::string_view> kBinaryLength14 = {
    "0;(1,1,0,1,0,0);(1,1,1,0,0,0)",
    "0;(1,0,1,0,0,1);(1,1,1,0,1,0)",
    "0;(1,0,1,1,0,0);(1,1,1,0,0,0)",
    "0;(1,0,1,0,0,1);(1,0,0,1,1,0)",
    "0;(0,1,1,1,0,0);(1,1,0,1,0,0)",
    "0;(0,1,1,0,0,1);(1,1,1,1,0,0)",
    "0;(1,1,1,1,0,0);(1,1,1,0,0,0)",
    "0;(0,1,1,0,0,1);(1,1,1,1,1,0)",
    "0;(1,1,1,1,0,0);(1,1,0,1,0,0)",
    "0;(1,1,1,0,0,1);(1,1,0,1,0,0)",
    "0;(1,1,0,0,1,0);(1,1,1,0,0,0)",
    "0;(1,1,1,0,0,1);(1,1,0,0,1,0)",
    "0;(1,1,0,0,1,0);(1,1,1,1,0,0)",
    "0;(1,1,1,0,0,1);(0,1,1,0,1,0)",
    "0;(1,0,1,0,1,0);(0,1,1,1,0,0)",
    "0;(1,0,0,1,0,1);(1,1,0,0,1,0)",
    "0;(0,1,1,0,1,0);(1,1,1,0,0,0)",
    "0;(1,0,0,1,0,1);(1,1,1,0,1,0)",
    "0;(0,1,1,0,1,0);(1,1,0,1,0,0)",
    "0;(0,1,0,1,0,1);(1,1,1,0,0,0)",
    "0;(0,1,1,0,1,0);(0,1,1,1,0,0)",
    "0;(0,0,1,1,0,1);(1,1,0,1,0,0)",
    "0;(0,1,1,0,1,0);(1,0,1,0,1,0)",
    "0;(1,0,1,1,0,1);(0,0,1,1,0,1)",
    "0;(0,1,1,0,1,0);(0,1,1,0,1,0)",
    "0;(0,1,1,1,0,1);(1,0,0,1,1,0)",
    "0;(1,1,1,0,1,0);(1,1,0,1,0,0)",
    "0;(0,1,1,1,0,1);(0,1,1,1,0,1)",
    "0;(1,1,1,0,1,0);(0,1,1,0,1,0)",
    "0;(1,1,1,1,0,1);(0,0,1,1,1,0)",
    "0;(1,0,0,1,1,0);(1,1,0,1,0,0)",
    "0;(1,0,0,0,1,1);(1,1,0,1,0,0)",
    "0;(1,0,0,1,1,0);(1,0,1,1,0,0)",
    "0;(1,0,1,0,1,1);(0,1,0,1,1,0)",
    "0;(1,0,0,1,1,0);(1,1,1,1,0,0)",
    "0;(1,0,1,0,1,1);(0,1,1,1,1,0)",
    "0;(0,1,0,1,1,0);(1,0,1,1,0,0)",
    "0;(0,1,1,0,1,1);(1,1,1,0,1,0)",
    "0;(0,1,0,1,1,0);(0,1,1,1,0,0)",
    "0;(0,1,1,0,1,1);(1,0,1,1,0,1)",
    "0;(0,1,0,1,1,0);(1,1,0,0,1,0)",
    "0;(1,1,1,0,1,1);(1,0,1,1,0,0)",
    "0;(0,1,0,1,1,0);(1,0,1,0,1,0)",
    "0;(1,0,0,1,1,1);(1,0,1,0,0,1)",
    "0;(1,1,0,1,1,0);(1,0,1,1,0,0)",
    "0;(1,0,0,1,1,1);(1,1,0,0,1,1)",
    "0;(1,1,0,1,1,0);(0,1,1,0,1,0)",
    "0;(0,1,0,1,1,1);(1,0,1,0,1,1)",
    "0;(0,0,1,1,1,0);(1,1,0,1,0,0)",
    "0;(1,1,0,1,1,1);(1,1,1,0,0,0)",
    "0;(0,0,1,1,1,0);(1,0,1,1,0,0)",
    "0;(1,1,0,1,1,1);(0,1,0,1,1,0)",
    "0;(0,1,1,1,1,0);(1,1,0,0,1,0)",
    "0;(1,1,0,1,1,1);(0,1,1,1,0,1)",
    "0;(0,1,1,1,1,0);(1,0,1,0,1,0)",
    "0;(1,0,1,1,1,1);(1,1,0,1,1,0)",
    "0;(0,1,1,1,1,0);(0,1,1,0,1,0)",
    "0;(1,0,1,1,1,1);(1,1,1,0,1,1)",
    "0;(0,1,1,1,1,0);(0,1,0,1,1,0)",
    "0;(1,0,1,1,1,1);(1,1,0,1,1,1)",
    "0;(0,1,1,1,1,0);(1,1,0,1,1,0)",
    "0;(0,1,1,1,1,1);(1,0,1,0,1,0)",
    "0;(1,1,1,1,1,0);(1,1,1,0,0,0)",
    "1;(0,0,1,0,1,0);(1,1,0,0,0,0)",
    "0;(1,1,1,1,1,0);(0,1,1,1,0,0)",
    "1;(1,0,1,0,1,0);(1,0,1,0,1,0)",
    "0;(1,1,1,1,1,0);(1,1,0,0,1,0)",
    "1;(0,1,0,0,0,1);(1,0,0,1,0,0)",
    "0;(1,1,0,0,0,1);(1,1,1,1,0,0)",
    "1;(1,1,1,0,0,1);(1,0,1,1,1,0)",
    "0;(1,1,0,0,0,1);(1,0,0,1,1,0)",
    "1;(1,1,0,1,0,1);(1,0,1,0,0,0)",
    "0;(1,1,0,0,0,1);(1,0,1,1,1,0)",
    "1;(0,1,1,1,1,1);(1,1,1,0,0,0)",
    "0;(1,1,0,0,0,1);(1,1,1,1,1,0)",
};

const std::vector<std::string_view> kTernaryLength20 = {
    "0;(0,0,1,1,2,1,1,0,1);(1,2,0,1,1,2,2,2,2)",
    "0;(0,0,1,2,1,0,1,1,1);(1,2,2,0,2,1,2,0,0)",
    "0;(0,1,2,1,1,1,1,0,0);(2,0,0,2,2,2,2,1,2)",
    "0;(0,1,1,1,1,2,1,0,0);(1,0,0,2,1,2,2,2,2)",
    "0;(0,1,2,1,0,1,1,1,0);(2,2,2,2,0,2,1,2,0)",
    "0;(0,1,0,2,1,1,1,1,0);(2,0,1,1,1,1,2,0,1)",
    "0;(0,1,0,2,1,2,1,1,0);(1,0,2,2,1,2,1,0,2)",
    "0;(0,1,2,1,1,2,1,0,1);(1,0,2,0,2,1,2,2,1)",
    "0;(0,1,1,1,1,2,2,0,1);(2,0,2,0,1,1,2,2,2)",
    "0;(0,1,0,1,0,2,2,1,1);(2,2,2,2,1,1,0,2,0)",
    "0;(0,1,0,2,0,2,2,2,1);(2,2,2,1,1,1,0,1,0)",
    "0;(1,0,1,2,1,1,2,1,0);(2,0,0,2,1,2,2,1,2)",
    "1;(0,0,2,2,2,1,1,0,0);(2,0,0,2,2,1,1,1,0)",
    "1;(0,0,1,2,0,0,1,1,1);(1,2,2,2,0,0,1,2,0)",
    "1;(0,0,1,2,0,0,2,2,1);(1,2,2,1,0,0,2,1,0)",
    "1;(0,1,1,2,2,2,0,1,1);(1,0,1,1,2,2,2,1,1)",
    "1;(0,1,2,1,1,2,1,1,1);(1,1,2,2,2,1,2,2,1)",
    "1;(0,2,2,1,1,0,1,1,1);(1,1,0,1,0,1,0,2,2)",
    "1;(1,0,1,2,1,1,2,1,1);(1,2,2,2,1,2,2,1,2)",
    "1;(1,0,1,2,1,2,2,1,1);(1,1,2,2,1,1,2,1,2)",
    "1;(1,0,2,0,2,0,0,2,2);(2,2,0,2,2,0,2,2,2)",
    "1;(1,1,2,1,1,2,1,0,1);(2,2,2,0,2,1,2,2,1)",
    "1;(1,1,0,1,2,1,1,2,1);(2,2,2,1,2,2,1,2,0)",
    "1;(1,1,2,0,0,2,0,0,2);(2,2,0,0,2,2,0,1,0)",
    "1;(1,1,2,2,2,0,2,1,2);(2,1,1,2,1,0,1,1,1)",
    "1;(1,2,0,1,2,0,2,0,0);(2,2,0,1,1,0,1,0,0)",
    "1;(1,2,1,1,2,1,0,1,0);(1,2,2,2,0,2,1,2,2)",
};

}  // namespace dtc::reference::data

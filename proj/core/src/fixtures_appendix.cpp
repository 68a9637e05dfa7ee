#include "soscert/fixtures.hpp"

// Transcribed data tables for the bundled Gram certificate of the
// reference octic Hessian form. Exponents are over (x1,x2,x3,y1,y2,y3).

namespace soscert::detail {

const int kHessianBasis1[][6] = {
    {0, 0, 4, 1, 0, 0},
    {0, 2, 2, 1, 0, 0},
    {1, 0, 3, 0, 0, 1},
    {1, 1, 2, 0, 1, 0},
    {1, 2, 1, 0, 0, 1},
    {1, 3, 0, 0, 1, 0},
    {2, 0, 2, 1, 0, 0},
    {2, 2, 0, 1, 0, 0},
    {3, 0, 1, 0, 0, 1},
    {3, 1, 0, 0, 1, 0},
    {4, 0, 0, 1, 0, 0},
};
const int kHessianBasis2[][6] = {
    {0, 0, 4, 0, 1, 0},
    {0, 1, 3, 0, 0, 1},
    {0, 2, 2, 0, 1, 0},
    {0, 3, 1, 0, 0, 1},
    {0, 4, 0, 0, 1, 0},
    {1, 1, 2, 1, 0, 0},
    {1, 3, 0, 1, 0, 0},
    {2, 0, 2, 0, 1, 0},
    {2, 1, 1, 0, 0, 1},
    {2, 2, 0, 0, 1, 0},
    {3, 1, 0, 1, 0, 0},
    {4, 0, 0, 0, 1, 0},
};
const int kHessianBasis3[][6] = {
    {0, 0, 4, 0, 0, 1},
    {0, 1, 3, 0, 1, 0},
    {0, 2, 2, 0, 0, 1},
    {0, 3, 1, 0, 1, 0},
    {0, 4, 0, 0, 0, 1},
    {1, 0, 3, 1, 0, 0},
    {1, 2, 1, 1, 0, 0},
    {2, 0, 2, 0, 0, 1},
    {2, 1, 1, 0, 1, 0},
    {2, 2, 0, 0, 0, 1},
    {3, 0, 1, 1, 0, 0},
    {4, 0, 0, 0, 0, 1},
};
const int kHessianBasis4[][6] = {
    {0, 1, 3, 1, 0, 0},
    {0, 3, 1, 1, 0, 0},
    {1, 0, 3, 0, 1, 0},
    {1, 1, 2, 0, 0, 1},
    {1, 2, 1, 0, 1, 0},
    {1, 3, 0, 0, 0, 1},
    {2, 1, 1, 1, 0, 0},
    {3, 0, 1, 0, 1, 0},
    {3, 1, 0, 0, 0, 1},
};

const char* const kHessianGram1[] = {
    "48", "-100/9", "161/3", "-53/3", "515/18", "-409/12", "-2134/9", "-8396/27", "-160/3", "-448/3", "-1027/5",
    "-100/9", "32/9", "-217/18", "55/12", "-16/3", "6", "1549/27", "375/7", "329/30", "85/3", "1079/27",
    "161/3", "-217/18", "3196/3", "260/3", "329/3", "1939/30", "-155", "-12281/30", "-3389/15", "-1365/8", "-2069/12",
    "-53/3", "55/12", "260/3", "6862/9", "543/10", "118/3", "32/3", "454/3", "-223/24", "-1117/27", "350/3",
    "515/18", "-16/3", "329/3", "543/10", "16802/27", "434/3", "-3911/30", "-182", "-5185/27", "-341/3", "-180",
    "-409/12", "6", "1939/30", "118/3", "434/3", "768", "359/3", "866/3", "53", "-97", "1059/4",
    "-2134/9", "1549/27", "-155", "32/3", "-3911/30", "359/3", "22144/15", "31796/27", "965/4", "2042/3", "2815/3",
    "-8396/27", "375/7", "-12281/30", "454/3", "-182", "866/3", "31796/27", "24706/9", "1085/3", "13541/12", "4441/3",
    "-160/3", "329/30", "-3389/15", "-223/24", "-5185/27", "53", "965/4", "1085/3", "1682/9", "1861/12", "1156/3",
    "-448/3", "85/3", "-1365/8", "-1117/27", "-341/3", "-97", "2042/3", "13541/12", "1861/12", "8158/9", "3044/3",
    "-1027/5", "1079/27", "-2069/12", "350/3", "-180", "1059/4", "2815/3", "4441/3", "1156/3", "3044/3", "1792",
};
const char* const kHessianGram2[] = {
    "120", "86", "21", "36", "312/5", "-206/3", "763/12", "-341/3", "5/3", "550/9", "200/3", "14/3",
    "86", "13252/9", "1459/3", "334", "5293/12", "2369/18", "-76", "45", "-76", "5489/30", "-5501/30", "-4991/24",
    "21", "1459/3", "18586/15", "1427/4", "3442/9", "-1777/12", "320/3", "349/9", "-851/30", "479/3", "332/3", "-3169/27",
    "36", "334", "1427/4", "7220/9", "427", "-7", "70/3", "1189/30", "-4672/27", "185", "91/3", "-257/3",
    "312/5", "5293/12", "3442/9", "427", "896", "-62/3", "0", "239/3", "91/3", "64", "-35/3", "-460/3",
    "-206/3", "2369/18", "-1777/12", "-7", "-62/3", "10000/27", "-6841/21", "91", "329/30", "-134", "-18307/27", "-328/3",
    "763/12", "-76", "320/3", "70/3", "0", "-6841/21", "300", "-245/3", "-19", "123", "4927/9", "351/4",
    "-341/3", "45", "349/9", "1189/30", "239/3", "91", "-245/3", "1300/3", "1217/24", "1493/27", "-571/3", "-440/3",
    "5/3", "-76", "-851/30", "-4672/27", "91/3", "329/30", "-19", "1217/24", "8306/27", "70", "-253/3", "-573/4",
    "550/9", "5489/30", "479/3", "185", "64", "-134", "123", "1493/27", "70", "2402/3", "4021/12", "-1667/9",
    "200/3", "-5501/30", "332/3", "91/3", "-35/3", "-18307/27", "4927/9", "-571/3", "-253/3", "4021/12", "7114/3", "1204/3",
    "14/3", "-4991/24", "-3169/27", "-257/3", "-460/3", "-328/3", "351/4", "-440/3", "-573/4", "-1667/9", "1204/3", "236",
};
const char* const kHessianGram3[] = {
    "1680", "634", "9034/9", "2245/3", "317/3", "703/3", "-2671/18", "2002/3", "295/3", "209/3", "-166", "-1113/5",
    "634", "918", "1708/3", "5971/15", "613/12", "0", "155/12", "968/3", "-593/9", "313/10", "-149", "-893/8",
    "9034/9", "1708/3", "5282/3", "9589/12", "566/9", "2537/18", "-146/3", "1787/3", "3619/30", "611/27", "-4411/30", "-5608/27",
    "2245/3", "5971/15", "9589/12", "13060/9", "101", "863/12", "-208/3", "14299/30", "-68/3", "59", "-124", "-490/3",
    "317/3", "613/12", "566/9", "101", "88", "37/3", "-16/3", "2402/27", "27", "-181/3", "-59/3", "-41/3",
    "703/3", "0", "2537/18", "863/12", "37/3", "920/9", "-2231/27", "307/3", "-7/3", "163/10", "-2141/15", "-151/4",
    "-2671/18", "155/12", "-146/3", "-208/3", "-16/3", "-2231/27", "1762/21", "-627/10", "17/3", "-41/3", "1727/27", "65/3",
    "2002/3", "968/3", "1787/3", "14299/30", "2402/27", "307/3", "-627/10", "17956/15", "2353/24", "1988/27", "-1333/12", "-2371/9",
    "295/3", "-593/9", "3619/30", "-68/3", "27", "-7/3", "17/3", "2353/24", "18134/27", "91/3", "182", "-237/4",
    "209/3", "313/10", "611/27", "59", "-181/3", "163/10", "-41/3", "1988/27", "91/3", "586/3", "-229/3", "-178/3",
    "-166", "-149", "-4411/30", "-124", "-59/3", "-2141/15", "1727/27", "-1333/12", "182", "-229/3", "3346/3", "284/3",
    "-1113/5", "-893/8", "-5608/27", "-490/3", "-41/3", "-151/4", "65/3", "-2371/9", "-237/4", "-178/3", "284/3", "80",
};
const char* const kHessianGram4[] = {
    "344/9", "-133/9", "67/3", "347/18", "-11/4", "16", "-8990/27", "-118/3", "-371/30",
    "-133/9", "6", "-97/12", "-22/3", "4/3", "-6", "2630/21", "44/3", "14/3",
    "67/3", "-97/12", "946/3", "113/3", "61/9", "-2191/30", "-709/3", "-841/3", "1673/24",
    "347/18", "-22/3", "113/3", "930", "1473/10", "2087/27", "-3751/30", "-455/24", "-4771/27",
    "-11/4", "4/3", "61/9", "1473/10", "844", "106", "-32/3", "-2899/27", "-200/3",
    "16", "-6", "-2191/30", "2087/27", "106", "644/3", "-398/3", "128", "-124",
    "-8990/27", "2630/21", "-709/3", "-3751/30", "-32/3", "-398/3", "81458/27", "1177/3", "280/3",
    "-118/3", "44/3", "-841/3", "-455/24", "-2899/27", "128", "1177/3", "1330/3", "-1495/12",
    "-371/30", "14/3", "1673/24", "-4771/27", "-200/3", "-124", "280/3", "-1495/12", "338/3",
};

const int kHessianBlockSizes[4] = {11, 12, 12, 9};

}  // namespace soscert::detail

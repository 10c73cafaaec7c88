#include "chordenum/golden.hpp"

namespace chordenum::golden {

// Rows n = 1..20: linear, chord, up to rotation, up to rotation and reflection.
const GoldenTable& loopless_table() {
  static const GoldenTable table = {
      {"0", "0", "0", "0"},
      {"1", "1", "1", "1"},
      {"5", "4", "2", "2"},
      {"36", "31", "7", "7"},
      {"329", "293", "36", "29"},
      {"3655", "3326", "300", "196"},
      {"47844", "44189", "3218", "1788"},
      {"721315", "673471", "42335", "21994"},
      {"12310199", "11588884", "644808", "326115"},
      {"234615096", "222304897", "11119515", "5578431"},
      {"4939227215", "4704612119", "213865382", "107026037"},
      {"113836841041", "108897613826", "4537496680", "2269254616"},
      {"2850860253240", "2737023412199", "105270612952", "52638064494"},
      {"77087063678521", "74236203425281", "2651295555949", "1325663757897"},
      {"2238375706930349", "2161288643251828", "72042968876506", "36021577975918"},
      {"69466733978519340", "67228358271588991", "2100886276796969", "1050443713185782"},
      {"2294640596998068569", "2225173863019549229", "65446290562491916", "32723148860301935"},
      {"80381887628910919255", "78087247031912850686", "2169090198219290966", "1084545122297249077"},
      {"2976424482866702081004", "2896042595237791161749", "76211647261082309466", "38105823782987999742"},
      {"116160936719430292078411", "113184512236563589997407", "2829612806029873399561", "1414806404051118314077"},
  };
  return table;
}

const GoldenTable& simple_table() {
  static const GoldenTable table = {
      {"0", "0", "0", "0"},
      {"1", "1", "1", "1"},
      {"3", "1", "1", "1"},
      {"24", "21", "4", "4"},
      {"211", "168", "21", "18"},
      {"2325", "1968", "176", "116"},
      {"30198", "26094", "1893", "1060"},
      {"452809", "398653", "25030", "13019"},
      {"7695777", "6872377", "382272", "193425"},
      {"146193678", "132050271", "6604535", "3313522"},
      {"3069668575", "2798695656", "127222636", "63667788"},
      {"70595504859", "64866063276", "2702798537", "1351700744"},
      {"1764755571192", "1632224748984", "62778105236", "31390695708"},
      {"47645601726541", "44316286165297", "1582725739329", "791372281393"},
      {"1381657584006399", "1291392786926821", "43046433007765", "21523271532811"},
      {"42829752879449400", "40202651019430461", "1256332883208474", "628166776833181"},
      {"1413337528735664887", "1331640833909877144", "39165907107963273", "19582955637428422"},
      {"49465522112961344241", "46762037794122159492", "1298945495674093932", "649472761243051940"},
      {"1830184115528550306438", "1735328399106396110310", "45666536827274985585", "22833268501579122332"},
      {"71375848864779552073957", "67858430028772637693845", "1696460750775267473762", "848230375982060558217"},
  };
  return table;
}

}  // namespace chordenum::golden

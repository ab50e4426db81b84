//! Precomputed packings of K equal spheres in the unit cube, K = 1..=64.
//!
//! Generated offline by a multi-start max-min spreading optimizer and
//! frozen here. Every entry is validated by tests against the table's
//! own radius: pairwise center distance >= 2r and centers inside
//! [r, 1 - r]^3 (both with 1e-9 slack).

/// Largest tabulated sphere count.
pub const K_MAX: usize = 64;

/// Packing radius for each K (index K - 1).
pub(crate) static RADII: [f64; K_MAX] = [
    0.5,
    0.31698729810778065,
    0.29289321173865285,
    0.29289321881345254,
    0.25199498136151194,
    0.2523364716846735,
    0.2500077087786658,
    0.25,
    0.2169139535980996,
    0.20701827828056266,
    0.20350044450492288,
    0.196867442815611,
    0.19731804342715156,
    0.19366794031068466,
    0.183552479637012,
    0.17169627114685104,
    0.17344363207015825,
    0.16836743841273516,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.16666666666666666,
    0.1431209783182159,
    0.14044111741761908,
    0.1365825703100492,
    0.13589315038440997,
    0.13674469479026674,
    0.1344121529193312,
    0.13025038620852147,
    0.1297658475338562,
    0.13274569219049295,
    0.13097002139300587,
    0.12554408357209387,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
    0.125,
];

/// Sphere centers for all K, concatenated; the block for K starts at
/// K * (K - 1) / 2 and holds K entries.
pub(crate) static CENTERS: [[f64; 3]; 2080] = [
    [0.5, 0.5, 0.5],
    [0.31698729810778065, 0.31698729810778065, 0.31698729810778065],
    [0.6830127018922194, 0.6830127018922194, 0.6830127018922194],
    [0.7071067882613471, 0.29289321173865285, 0.7071067882613471],
    [0.7071067882613471, 0.7071067882613471, 0.29289326004840804],
    [0.29289321173865285, 0.2928932600484081, 0.2928932600484109],
    [0.29289321881345254, 0.29289321881345254, 0.29289321881345254],
    [0.7071067811865475, 0.7071067811865475, 0.29289321881345254],
    [0.7071067811865475, 0.29289321881345254, 0.7071067811865475],
    [0.29289321881345254, 0.7071067811865475, 0.7071067811865475],
    [0.7480050186384881, 0.6832240295903016, 0.35979222027716407],
    [0.25199498136151194, 0.25199498136151194, 0.7241158014817588],
    [0.2561125681364064, 0.7329871018417111, 0.49695205494468575],
    [0.7480049850139155, 0.3411174141065527, 0.7302109457707044],
    [0.4141418139906457, 0.32139396120185265, 0.25199498136151194],
    [0.25719008939531846, 0.7476635283153266, 0.6340851019524705],
    [0.6341159555574261, 0.7476635283153266, 0.2523364716846735],
    [0.2523364716846735, 0.4176041314441953, 0.2523364716846735],
    [0.7042932341715253, 0.28062686252321034, 0.43028897211788397],
    [0.2780140464671658, 0.2523364716846735, 0.7284898530230618],
    [0.7476635283153266, 0.696547637078391, 0.7414058881818854],
    [0.7499922912213342, 0.7459233513687593, 0.7499825823506424],
    [0.25000776643086003, 0.2547494066683705, 0.2511768095408],
    [0.2500077087786658, 0.4946397941689672, 0.7499922912213342],
    [0.2500077087786658, 0.7499922912213342, 0.32009635027265104],
    [0.7499922912213342, 0.2500077087786658, 0.2540766485362022],
    [0.6860932056627345, 0.2500077087786658, 0.7499922912213342],
    [0.7450864904212917, 0.7499825027861163, 0.2500077087786658],
    [0.25, 0.25, 0.25],
    [0.25, 0.25, 0.75],
    [0.25, 0.75, 0.25],
    [0.25, 0.75, 0.75],
    [0.75, 0.25, 0.25],
    [0.75, 0.25, 0.75],
    [0.75, 0.75, 0.25],
    [0.75, 0.75, 0.75],
    [0.6914614176744484, 0.7640944272512077, 0.30598017671964584],
    [0.2169139535980996, 0.2169139535980996, 0.7830860464019004],
    [0.3759368505406575, 0.2169139535980996, 0.2169139535980996],
    [0.7828100909776647, 0.32797489581477535, 0.7536837879232219],
    [0.22034167481397757, 0.7830860464019004, 0.7782724824800983],
    [0.22397609010523417, 0.7720462162537212, 0.2852896401348605],
    [0.6972847988631582, 0.7529542115087763, 0.7830860464019004],
    [0.7830860464019004, 0.32604456478601784, 0.31980084661014896],
    [0.44408001655987966, 0.49660134208768325, 0.541472309994892],
    [0.5186368269973257, 0.489455513909694, 0.7795922109327494],
    [0.24201200602854886, 0.7726964611326003, 0.21518427661858602],
    [0.7929817217194374, 0.21279748872244098, 0.2375711610669738],
    [0.23111241713269484, 0.22127682970388532, 0.3217199292418099],
    [0.7929817217194374, 0.7855351909259792, 0.20701827828056266],
    [0.22875563227098872, 0.7863935277793228, 0.6695824544446103],
    [0.21092524178523864, 0.21308876871894, 0.7605850373415155],
    [0.5290897362902799, 0.5069892990818702, 0.3625800869998662],
    [0.757133914875242, 0.787642014591916, 0.6194978011189163],
    [0.7929817217194374, 0.20701827828056266, 0.6515673819382065],
    [0.4226164579384418, 0.5636737960296129, 0.6689994448614498],
    [0.7920774477046679, 0.20350044450492288, 0.20350044450492288],
    [0.20515374484130794, 0.2152352666230375, 0.22022078934619765],
    [0.7744038139451459, 0.7964995554950771, 0.21476587934459004],
    [0.22009937397027812, 0.7957272713674962, 0.21683759837047273],
    [0.7783531507479806, 0.23096280897880456, 0.7964995554950771],
    [0.7841936003473576, 0.7724730260502676, 0.7849952586281637],
    [0.20560306752237786, 0.20494410108100652, 0.7911590927955254],
    [0.49765302489074464, 0.49809551818128234, 0.21105711575028632],
    [0.5035887083604629, 0.20350044450492288, 0.49750115517864596],
    [0.7964995554950771, 0.49510896763143936, 0.4873923920086636],
    [0.26417909937590617, 0.47382704946354104, 0.5300865906145737],
    [0.7819996179556397, 0.7958135890474657, 0.22187204829836435],
    [0.7753327544616925, 0.23772173896606685, 0.7963053619654716],
    [0.7487887889919788, 0.21452478388119411, 0.21149705864309198],
    [0.6942106618261312, 0.8029370090390895, 0.8031325519534722],
    [0.196867442815611, 0.803132557184389, 0.196867442815611],
    [0.26772255680117607, 0.196867442815611, 0.22412885743172925],
    [0.7796528045261961, 0.529029789991512, 0.5121617067537366],
    [0.21356923755808607, 0.7759910180041972, 0.7812202238005864],
    [0.49657225979870045, 0.5168497607080618, 0.20781046789259533],
    [0.32555040039202143, 0.196867442815611, 0.803132557184389],
    [0.47341741905734025, 0.803132557184389, 0.4771303036919057],
    [0.4955909651020354, 0.4557187095204479, 0.7274115149866234],
    [0.7985740036690127, 0.7936420449092022, 0.19731804342715156],
    [0.19731804342715156, 0.7819815914190621, 0.19731804342715156],
    [0.8026819565728485, 0.19731804342715156, 0.2241424953208154],
    [0.25773477706444575, 0.19731804342715156, 0.19731804342715156],
    [0.7753740286607257, 0.8013177348201237, 0.779290674554472],
    [0.2021732083140464, 0.7870441852352296, 0.7885700516104328],
    [0.8026819565728485, 0.2060500718709568, 0.7845636898458513],
    [0.4973462275648384, 0.7995765681640915, 0.45307407280683454],
    [0.19731804342715156, 0.19731804342715156, 0.72744322849371],
    [0.5257051992912214, 0.4865871977657953, 0.21321930776325546],
    [0.8026819565728485, 0.530014117301646, 0.4909523083826607],
    [0.19731804342715156, 0.48652820866544044, 0.458937881488257],
    [0.4641420186135842, 0.2984340854454559, 0.49265644135757813],
    [0.7911258243619593, 0.8033830260451732, 0.7961278133421145],
    [0.7812013756084324, 0.7872517064089762, 0.20033464473108228],
    [0.7978794573239788, 0.21121253853401006, 0.7926385586677319],
    [0.2692195253684837, 0.8063320596893153, 0.8063320596893153],
    [0.19366794031068466, 0.8063320596893153, 0.19366794031068466],
    [0.802525288823629, 0.2539115096461275, 0.20398505706640657],
    [0.23679561412354033, 0.21572508862960177, 0.8033959866125695],
    [0.7998162594952842, 0.4896169153242621, 0.5209586318162249],
    [0.5354765233449751, 0.7750624027707016, 0.5031588870168294],
    [0.20017228117736344, 0.19366794031068466, 0.22926826154670618],
    [0.5315721305026669, 0.516055967358246, 0.8063320596893153],
    [0.4792856940226601, 0.5446995250510235, 0.19366794031068466],
    [0.19366794031068466, 0.5754337441128013, 0.5046583779139335],
    [0.22978950738808834, 0.4762157540776938, 0.5961021048206829],
    [0.7881985913044838, 0.7895990500297618, 0.19636807539475482],
    [0.816447520362988, 0.20185686090125, 0.7903144538129359],
    [0.538653976309134, 0.2117061917320707, 0.183552479637012],
    [0.7059475341973733, 0.8100506667151808, 0.8047252792864623],
    [0.183552479637012, 0.816447520362988, 0.2315919062841857],
    [0.6684710493675858, 0.5143157945647265, 0.4807499585342857],
    [0.18678170395343113, 0.3123847495887469, 0.21211439586678765],
    [0.41846078027937955, 0.816447520362988, 0.5388565138446374],
    [0.48356168047887166, 0.18723676466282432, 0.5766126571894975],
    [0.46524183078993814, 0.5859928088510793, 0.183552479637012],
    [0.5255016819687273, 0.47390591840285845, 0.816447520362988],
    [0.183552479637012, 0.766174520521852, 0.816447520362988],
    [0.816447520362988, 0.183552479637012, 0.42188872635758706],
    [0.2056557331262027, 0.183552479637012, 0.816447520362988],
    [0.5984500429197922, 0.30151533509965467, 0.7189125369271535],
    [0.20097457957575657, 0.828303728853149, 0.17169627114685104],
    [0.8245470564065503, 0.804845294800386, 0.31471583630781397],
    [0.18074164529346243, 0.828303728853149, 0.8141400714765636],
    [0.24303217787538917, 0.17169630349212808, 0.17169627114685104],
    [0.7998272765395206, 0.30144483448843795, 0.17169627114685104],
    [0.7193770351150286, 0.7835250520853874, 0.811957674738933],
    [0.18254763676591299, 0.4292379421058922, 0.5927741928795887],
    [0.5091879857949477, 0.5317908231608408, 0.3091021433224236],
    [0.45692680969257443, 0.8281150873621029, 0.5238120601567688],
    [0.26576422699572205, 0.172765622209528, 0.8082341447612547],
    [0.8130579748616306, 0.5659281128417805, 0.5633673955651108],
    [0.4286343335588088, 0.592351089615941, 0.7859619728091982],
    [0.38274368805929115, 0.17169627114685104, 0.48538263046944635],
    [0.17169627114685104, 0.4967777009193516, 0.25626406383953554],
    [0.828303728853149, 0.18326685844500112, 0.4928527684263526],
    [0.5587975258787075, 0.2117204925439085, 0.7353882539408491],
    [0.17344363207015825, 0.8235074342412525, 0.20988053607296145],
    [0.8051583606073867, 0.805698944089301, 0.5015178911131232],
    [0.17344363207015825, 0.17344363207015825, 0.18959636456383372],
    [0.22703060550106588, 0.7748883417186384, 0.8250808810131152],
    [0.7770485911983548, 0.2494912377630576, 0.18151765538190873],
    [0.5191222289615085, 0.5173392741891, 0.43440756082893295],
    [0.6198469059788765, 0.6175499432099956, 0.8253787052203797],
    [0.18766173433979125, 0.38009780437000656, 0.8147674729022731],
    [0.8087797491993761, 0.6237081461799647, 0.1749926797452924],
    [0.8208171032151399, 0.3831723132012739, 0.540757001124265],
    [0.35437379962558246, 0.825545937021239, 0.5058381225571329],
    [0.49116548329489085, 0.17344363207015825, 0.3972615828552175],
    [0.5199824365954864, 0.8145903807269007, 0.19714801296123818],
    [0.29129983568769063, 0.4992960197008218, 0.17344363207015825],
    [0.17344363207015825, 0.5226785732999167, 0.49885713131470866],
    [0.17344363207015825, 0.17344363207015825, 0.5364865780144296],
    [0.6949553065901248, 0.21066636882071318, 0.7012328821149113],
    [0.1970640783228228, 0.8316325581376502, 0.1870641671890251],
    [0.8268750700533257, 0.8166236227189758, 0.43022909120618064],
    [0.20596936401651605, 0.6839985923709366, 0.8316325615872648],
    [0.27344952191200533, 0.16836743841273516, 0.18701558993349143],
    [0.7999923570531108, 0.2051456160666127, 0.17293425620509792],
    [0.17671106962425073, 0.16836743841273516, 0.7458942053267388],
    [0.4769815289053597, 0.5017716807224826, 0.4378074955659234],
    [0.7834946230692837, 0.6292720503531012, 0.8284386214455405],
    [0.7224533363096944, 0.567221911692398, 0.17580886544117297],
    [0.5141239857032484, 0.8244199331036836, 0.6269467847424309],
    [0.4720304026645349, 0.46957367834264335, 0.8309470606215752],
    [0.5207556094739614, 0.8264437471223887, 0.2902832815747606],
    [0.20801030915219554, 0.696091042813499, 0.49512106927844046],
    [0.8008583957075808, 0.47964159395834544, 0.5272748733125235],
    [0.5194018908139804, 0.16836743841273516, 0.4170108281389156],
    [0.1797313252351597, 0.3439986507838937, 0.45860526964047466],
    [0.2750297132255135, 0.5045818442774099, 0.16836743841273516],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.8333333333333334],
    [0.8333333333333334, 0.5, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.8333333333333334],
    [0.8333333333333334, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.8333333333333334],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.8333333333333334],
    [0.8333333333333334, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.8333333333333334],
    [0.8333333333333334, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.5],
    [0.16666666666666666, 0.16666666666666666, 0.8333333333333334],
    [0.16666666666666666, 0.5, 0.16666666666666666],
    [0.16666666666666666, 0.5, 0.5],
    [0.16666666666666666, 0.5, 0.8333333333333334],
    [0.16666666666666666, 0.8333333333333334, 0.16666666666666666],
    [0.16666666666666666, 0.8333333333333334, 0.5],
    [0.16666666666666666, 0.8333333333333334, 0.8333333333333334],
    [0.5, 0.16666666666666666, 0.16666666666666666],
    [0.5, 0.16666666666666666, 0.5],
    [0.5, 0.16666666666666666, 0.8333333333333334],
    [0.5, 0.5, 0.16666666666666666],
    [0.5, 0.5, 0.5],
    [0.5, 0.5, 0.8333333333333334],
    [0.5, 0.8333333333333334, 0.16666666666666666],
    [0.5, 0.8333333333333334, 0.5],
    [0.5, 0.8333333333333334, 0.8333333333333334],
    [0.8333333333333334, 0.16666666666666666, 0.16666666666666666],
    [0.8333333333333334, 0.16666666666666666, 0.5],
    [0.8333333333333334, 0.16666666666666666, 0.8333333333333334],
    [0.8333333333333334, 0.5, 0.16666666666666666],
    [0.8333333333333334, 0.5, 0.5],
    [0.8333333333333334, 0.5, 0.8333333333333334],
    [0.8333333333333334, 0.8333333333333334, 0.16666666666666666],
    [0.8333333333333334, 0.8333333333333334, 0.5],
    [0.8333333333333334, 0.8333333333333334, 0.8333333333333334],
    [0.7295824280735946, 0.40995201420387595, 0.48238214160756315],
    [0.14467544726213183, 0.8487653588766304, 0.20665986677746834],
    [0.1431209783182159, 0.5480656034918439, 0.8552992414805363],
    [0.1431209783182159, 0.1431209783182159, 0.1431209783182159],
    [0.8559322378724507, 0.8568790216817841, 0.8533996360346706],
    [0.7083100359314283, 0.8559076981597343, 0.1607216963131124],
    [0.48319831681624986, 0.1442719006737779, 0.8300830792687809],
    [0.436959771362858, 0.8506864472933334, 0.5921285544565351],
    [0.3013535641650133, 0.44469590920836755, 0.45439554366224855],
    [0.6284914696288366, 0.17317268986695095, 0.1499894958910753],
    [0.5740056549878818, 0.5455017719351907, 0.8338283955874995],
    [0.8565754388161865, 0.19765298498491546, 0.814816520573377],
    [0.5148925896359902, 0.5551799045062165, 0.16231140576055816],
    [0.8546541210679579, 0.8220120567961295, 0.494864008381578],
    [0.1528886887195822, 0.1431209783182159, 0.7018989938498952],
    [0.8545687852621578, 0.4669191863289911, 0.16914211986463873],
    [0.47936482991457, 0.15561713911864922, 0.45916302841599704],
    [0.1546056438268246, 0.5259011032153145, 0.16207849616240239],
    [0.15684497766750205, 0.7256711434392255, 0.5060163763789679],
    [0.8525813418723885, 0.5656529009602835, 0.7106574165939767],
    [0.42416168702140516, 0.8466739110894607, 0.30375640584826136],
    [0.8405488757924329, 0.1482774118572609, 0.44851021060226076],
    [0.27526910737528976, 0.801725636267945, 0.8400334762369415],
    [0.35651883009184326, 0.3813037824928716, 0.7293820702889775],
    [0.569869374028056, 0.644477059275872, 0.4446435494156228],
    [0.14788014462628965, 0.20518846163259372, 0.4225121657063016],
    [0.37623561348027734, 0.3053169453780318, 0.17896080088813138],
    [0.570958354619236, 0.8315347623843596, 0.8443429380707926],
    [0.5555160584319618, 0.3122686907329195, 0.38413344759312984],
    [0.18215149448972912, 0.8284016233462397, 0.8427745291233618],
    [0.8595588825823809, 0.8507773879368544, 0.7764942499411902],
    [0.14044111741761908, 0.8269428764093725, 0.14516291286903368],
    [0.8358868621692659, 0.8243169782587192, 0.1460115758000421],
    [0.1426223297477082, 0.14228472823221636, 0.8199305190386552],
    [0.8057369991014437, 0.29917390905425423, 0.8564498716001777],
    [0.1446704028424246, 0.21353413195558502, 0.17079496065767308],
    [0.47587041889027093, 0.8495234801306619, 0.5006554975957852],
    [0.16951150773489881, 0.4791849825042176, 0.5239970362461689],
    [0.493895360031705, 0.5620315884202878, 0.7898718285672721],
    [0.8527709646510981, 0.15979067134468106, 0.1581073614666081],
    [0.8415741870443274, 0.5775723517476945, 0.4609692440784968],
    [0.5314955287717018, 0.6146849199604741, 0.15839874359495615],
    [0.5096851996723375, 0.14044111741761908, 0.6990567038891345],
    [0.8338893666694626, 0.15066318182016386, 0.5453579849243335],
    [0.143149021981426, 0.8079342455170201, 0.5199606924473784],
    [0.25951027994858283, 0.16630763434442486, 0.47320112373164047],
    [0.8171535092000185, 0.4759585999492404, 0.14798610569338966],
    [0.16522303943875322, 0.5350740465978356, 0.8595588825823809],
    [0.5203798756437151, 0.8556925715365468, 0.854293221373169],
    [0.22460508963427717, 0.4955362269187906, 0.15572213422354836],
    [0.7566266536477045, 0.8572028424021392, 0.5040897203589814],
    [0.6768908137656681, 0.4111202734488154, 0.6224627648743566],
    [0.453259347267976, 0.5411779564574288, 0.5107783959070245],
    [0.4247875615749399, 0.19343608387455588, 0.16576746694873767],
    [0.8132104905533826, 0.5752327684091116, 0.8051616371439624],
    [0.32364927185306513, 0.34984025637342664, 0.7199723442337853],
    [0.3148189787451772, 0.7004111010059924, 0.3253764005388898],
    [0.5923891707421834, 0.1723375644969015, 0.8507799658164277],
    [0.14986282262734466, 0.8292904818166853, 0.15136055354150793],
    [0.8604249014416144, 0.8238102528714059, 0.4810829065278216],
    [0.776454634156287, 0.18013149815092577, 0.14590274529321368],
    [0.1611729075578504, 0.7328880601366087, 0.850325826048819],
    [0.1421312335529973, 0.15512762194202218, 0.3432321838364158],
    [0.46145331630363784, 0.5180823220006999, 0.516058901838101],
    [0.13711065980208115, 0.25339155825169757, 0.8634174296899508],
    [0.8148343105025617, 0.563422615525721, 0.8298772824818962],
    [0.5986340037072281, 0.7509831535157537, 0.14205640822122376],
    [0.5300472791739044, 0.8612117268706214, 0.7386191629113572],
    [0.8579031724312429, 0.15930626148660265, 0.5503597026066648],
    [0.39946452401753474, 0.3827232312733897, 0.1603325931930777],
    [0.8463521053516658, 0.47635944218752124, 0.36832833630072137],
    [0.45726701489980315, 0.15548915207361944, 0.5130700817445858],
    [0.20162644987829398, 0.7622016595429773, 0.49556159852911885],
    [0.44379827511177583, 0.5228854295101936, 0.8634174296899508],
    [0.16275549748108675, 0.41292771855159605, 0.5743106661283145],
    [0.5076789662513896, 0.8549463861048496, 0.43096799054849855],
    [0.13706953828119642, 0.542359961162265, 0.2861543977004378],
    [0.7987229894860023, 0.8477809498931235, 0.8405485239690162],
    [0.697227004703245, 0.37756358558866715, 0.6386883225694974],
    [0.8619618842000827, 0.8297205029956377, 0.20530130062125618],
    [0.6567123914942488, 0.48116939404865045, 0.17039482221683233],
    [0.5247617936574006, 0.152457510989519, 0.24839205461955546],
    [0.8372038614815344, 0.2930326332610391, 0.8616271601179165],
    [0.3753707792833545, 0.2915025998870483, 0.7353594037008078],
    [0.3827221826444781, 0.6618074582872538, 0.2836508116453498],
    [0.6820104048616028, 0.6506613077807742, 0.6076917412918632],
    [0.16266525779878294, 0.14200099253787168, 0.6153079811774467],
    [0.5854090429635519, 0.5897845688145666, 0.2559362568044515],
    [0.1362964705721661, 0.13589315038440997, 0.8169643294482803],
    [0.8618705060307054, 0.23753462214681725, 0.8421587588853245],
    [0.1397668982603962, 0.8529672624073387, 0.7677081914959688],
    [0.8475071487228083, 0.8604414523195985, 0.7561168893722171],
    [0.15438135375802356, 0.15821741372846124, 0.18656389844473034],
    [0.14417434741922938, 0.8341269585486387, 0.16333600157345257],
    [0.7764338917519796, 0.13589315038440997, 0.1542623210651919],
    [0.4719195119633086, 0.48853013726552263, 0.7195828669392876],
    [0.4689571205451406, 0.15206162768937026, 0.4500873145181556],
    [0.18550896323937405, 0.49933101422381376, 0.39419633216075284],
    [0.8546640615290412, 0.8592648986284906, 0.14087463660763241],
    [0.4988251269160897, 0.8473003621005472, 0.5632982422007],
    [0.8522474146887271, 0.4405679853063047, 0.5149390758444525],
    [0.5122459849570526, 0.14407675385935628, 0.8623413379471186],
    [0.1535034462785222, 0.5136340497037815, 0.8460859696857],
    [0.47523628484437175, 0.2889947952603372, 0.15400518219195716],
    [0.8010200697526291, 0.756218163044988, 0.44381242472236987],
    [0.1413279370372726, 0.17022918657419508, 0.4977377000225098],
    [0.7264641858619593, 0.5809685728458974, 0.8436828892656115],
    [0.4281213633064603, 0.7862509369253894, 0.8602049349355342],
    [0.8639672868246533, 0.5378659974288802, 0.1460502426687086],
    [0.8638667360528439, 0.13589315038440997, 0.5279104718435577],
    [0.17545902618828027, 0.8573944861858249, 0.4570000149482871],
    [0.46511591208040065, 0.8568871352154719, 0.2240476122300753],
    [0.31346630421634025, 0.5401364813139204, 0.14738295403858023],
    [0.45455259112760427, 0.4441964077175298, 0.4444828583635409],
    [0.6954876105331221, 0.3364746700305473, 0.31883007859649964],
    [0.3078038014300197, 0.6547434126032633, 0.5806333291917575],
    [0.32805352581424496, 0.26287541124485736, 0.672145371858968],
    [0.6492088426339103, 0.283546157957385, 0.6052950402871446],
    [0.18789983124954868, 0.5217991667078463, 0.6069258815279269],
    [0.8624781547115675, 0.8562420290808902, 0.15758964078243132],
    [0.8532710487962512, 0.15005147296348434, 0.8035697251846258],
    [0.8390200631454959, 0.8488240391695667, 0.8519857717947498],
    [0.6617471683952987, 0.21333912600653904, 0.15836190554486898],
    [0.20794489781447595, 0.857736359950755, 0.1386495141405613],
    [0.13674469479026674, 0.14446523016397766, 0.20958269593712214],
    [0.71253279433709, 0.534716415452263, 0.5072104304108747],
    [0.3072889818518056, 0.15506052020399883, 0.8584203955991389],
    [0.40146674229266377, 0.8626219200817362, 0.8341597102680542],
    [0.3635436864279191, 0.497885929566089, 0.1500513192852257],
    [0.5567505431270766, 0.46258053465734894, 0.8602497511300046],
    [0.5026768238377852, 0.847496104110877, 0.4021207758441626],
    [0.4393926610339498, 0.14690249211940254, 0.46797113785713984],
    [0.14332112457901164, 0.8510268598057225, 0.5226680711586471],
    [0.8554719220665228, 0.17915406604680045, 0.43973557104145694],
    [0.8237083249161726, 0.5050356649444575, 0.1468869840021634],
    [0.8496853729818261, 0.843149710421786, 0.49801809910247724],
    [0.13923411393691865, 0.2132144880816546, 0.5560074379820252],
    [0.8441183956643535, 0.5301375896594474, 0.8187038337588071],
    [0.14171428136410086, 0.6290714568257094, 0.3385541439329175],
    [0.6044743577773772, 0.717135210172899, 0.16206964687195805],
    [0.6656317119083698, 0.27469364836605814, 0.6351024228245579],
    [0.4425499979282469, 0.5181612245385927, 0.4184234298027814],
    [0.1436418198453214, 0.7026224732805333, 0.8072770956689037],
    [0.6546417549455905, 0.7403751237691141, 0.6812925236704471],
    [0.2749998396574246, 0.44149981911601993, 0.8632553052097333],
    [0.3890215350110772, 0.2257018800751342, 0.14210344866398913],
    [0.22072273134905024, 0.3673295466981201, 0.345283447527603],
    [0.3912740318903574, 0.7072024559818538, 0.6093545777082301],
    [0.5806342639591616, 0.1466280592709652, 0.8620020157146299],
    [0.4053980476272797, 0.35877074362329997, 0.6375372207780621],
    [0.5630267057248682, 0.4024497357892808, 0.6430006827251392],
    [0.14897355089386985, 0.8395210980959812, 0.16602413369969213],
    [0.8486493056078307, 0.8651737562915954, 0.1645936426145334],
    [0.18996954428526563, 0.1344121529193312, 0.1344121529193312],
    [0.18766282762582498, 0.8409094632616633, 0.8648475025125353],
    [0.8154859028293137, 0.13705097682267092, 0.16582408917969768],
    [0.8193818954340941, 0.8391175512850939, 0.8595170262281138],
    [0.1696273315061765, 0.13677013716238234, 0.8652832133890332],
    [0.4931931440816574, 0.8376629120829325, 0.4903228339772261],
    [0.1424515679923264, 0.5155796745951283, 0.48068792451784936],
    [0.45491312173540377, 0.5075884150671559, 0.13564913674500012],
    [0.8566755381946597, 0.1351975019220677, 0.784427630838521],
    [0.8592516108747187, 0.5387485176638575, 0.39137828027096044],
    [0.48327260996090227, 0.14275266679852805, 0.38976239327698703],
    [0.21901737236926516, 0.4889362493656161, 0.8593580494002869],
    [0.14994410200142208, 0.1360909614814061, 0.5166338086676653],
    [0.5105799900805696, 0.8500843705717173, 0.13825189506208427],
    [0.5044991915334014, 0.7355592181263955, 0.8082053154622975],
    [0.8435058410250543, 0.465936994314719, 0.7980437937482633],
    [0.828076539215413, 0.8575557502046414, 0.48991869703969826],
    [0.14656375036748498, 0.835399840326622, 0.5127137446349367],
    [0.49478952995087555, 0.18286668360609387, 0.856582544554028],
    [0.7708587116747652, 0.24019231956089432, 0.46213890186896667],
    [0.1497199556130751, 0.4689766337587069, 0.15960549669776963],
    [0.43421944978221527, 0.48587463547466514, 0.42228483748822354],
    [0.7568071871826864, 0.462000267527368, 0.1453739665987877],
    [0.6524315220827251, 0.6995380651685876, 0.3182910621652487],
    [0.2957184261020289, 0.31002496349818154, 0.6701637609251705],
    [0.7187474728524315, 0.6247992168108317, 0.62065571773828],
    [0.34437226693667006, 0.7002141856491721, 0.2871828449960776],
    [0.518796566253784, 0.24651188830112206, 0.14085751120718332],
    [0.33491370459459274, 0.6043827460297293, 0.6460325582012877],
    [0.2623860397981269, 0.29870945648617764, 0.3344840265746203],
    [0.5233578212964888, 0.23607177794689782, 0.20870538213386702],
    [0.7966140663920244, 0.8653702698402765, 0.8564975821345984],
    [0.1345580365203547, 0.4353493346087746, 0.8595061916230281],
    [0.13356297722801952, 0.8642896694584863, 0.16516071559602857],
    [0.86055586893376, 0.16851097224789252, 0.8278693840144875],
    [0.812764163196364, 0.8458608129562806, 0.17567772412718075],
    [0.43233958370061476, 0.6914042905634858, 0.5361334474392789],
    [0.14624665902408654, 0.13071035135596143, 0.4630965859561414],
    [0.8601214220985227, 0.5157941808739344, 0.5139438188587566],
    [0.438326264070379, 0.13819995705731242, 0.847456669943622],
    [0.15254188580322078, 0.40997721006606513, 0.15416222426526222],
    [0.1750839686236651, 0.8500428935547278, 0.8207902374450984],
    [0.6025036289607334, 0.5044610573969782, 0.829188138684828],
    [0.8467639472739745, 0.4489291595217101, 0.13575145963712773],
    [0.8634332511421414, 0.13655717732407952, 0.350292138711771],
    [0.4939396426977457, 0.6775212776957894, 0.17931388057039685],
    [0.5798067277705143, 0.3036614237889983, 0.548158169566685],
    [0.13948335688264946, 0.45717348497494315, 0.4813825508275965],
    [0.8291663096818614, 0.8444779845654791, 0.5164626433775676],
    [0.137903090414956, 0.867995175983619, 0.4906908038777419],
    [0.48310684970965584, 0.8675258895634518, 0.8602227530756066],
    [0.1514625004453097, 0.15997865845497808, 0.7764279373657745],
    [0.35505342355659386, 0.44352646098653475, 0.6747505499763441],
    [0.6087158880252541, 0.5310148387190923, 0.3872893278853995],
    [0.23299538818124677, 0.15093927557238407, 0.1778272306775151],
    [0.5813436757966063, 0.8593107209288298, 0.36167313863657113],
    [0.8600685079431422, 0.5886186400087225, 0.8353962909039524],
    [0.36938068715974776, 0.3871892776318654, 0.36729630865933394],
    [0.6692870127876367, 0.7175080086616606, 0.6784491367940473],
    [0.24620517619551746, 0.6317829149682885, 0.2543081532252688],
    [0.8443033130555863, 0.26168423210088265, 0.5782961635621557],
    [0.35638691369226627, 0.640412027150659, 0.8453229629573602],
    [0.3667430410493848, 0.16236353146074628, 0.598152405164917],
    [0.16596294217830476, 0.6590824110213337, 0.6438395284408871],
    [0.6168385830171579, 0.44949931215808026, 0.1493400802113301],
    [0.13735452004395807, 0.8200302289381363, 0.8544198487551489],
    [0.5345177906418236, 0.1430402893680734, 0.8588534237679485],
    [0.8684402969131314, 0.841187950343419, 0.8038297104100244],
    [0.13255425889372194, 0.8278552960097258, 0.1824319302362905],
    [0.13631173746392491, 0.19029665616983737, 0.391404938100541],
    [0.8378838796039974, 0.8690981582072259, 0.2559916098021685],
    [0.8543052452941948, 0.3866671297015315, 0.598252081429108],
    [0.4653731008767237, 0.6832710176322473, 0.5461882695106924],
    [0.18015803095684688, 0.39812946222467305, 0.7822371937781384],
    [0.5617758540618507, 0.13976838714145343, 0.4466106303827362],
    [0.8616309446785845, 0.1297658475338562, 0.17031104361077948],
    [0.21911549147950451, 0.4635359286955705, 0.12995666962904054],
    [0.13011425978499302, 0.5983615377145293, 0.46371062572161736],
    [0.4945661697273016, 0.8669863014660626, 0.1422527127563589],
    [0.5955477069094597, 0.5036755429981449, 0.850343664299224],
    [0.4852669768220865, 0.8540951509922505, 0.86162410604827],
    [0.3567665272778716, 0.13896703913733083, 0.13425779453656547],
    [0.8590819366393426, 0.13788457925888092, 0.8191550877024607],
    [0.38918615378149757, 0.4130867403598081, 0.3997080279668923],
    [0.8558526918106789, 0.5748252285589841, 0.3489001376345222],
    [0.7254104093579765, 0.8702341382368749, 0.5198672284194447],
    [0.31249715316509596, 0.1660958300212969, 0.6280347686663571],
    [0.2494346186141993, 0.8645317753778409, 0.5728053412261599],
    [0.8322390502095498, 0.1297658475338562, 0.4698458024537375],
    [0.3557974512485289, 0.6533688359756693, 0.2585212383635148],
    [0.34933746168679203, 0.6244015762149698, 0.8550869038266947],
    [0.8555216909467531, 0.5696000632803616, 0.788822452292549],
    [0.5224368403470175, 0.3227004760983446, 0.6663639196696797],
    [0.6357740650167667, 0.4659620268922767, 0.48200692275066803],
    [0.626058354364906, 0.7074633801438472, 0.34382304955663806],
    [0.2037677562039525, 0.15271949557555758, 0.8633126854305747],
    [0.6076917543344873, 0.1898007494444474, 0.17679207608082606],
    [0.7783966184181751, 0.32968513714852, 0.313353083992843],
    [0.6554121482463531, 0.7194820365871675, 0.719192961919171],
    [0.7932937813649323, 0.8376218159639708, 0.1441702041238596],
    [0.21637174660201033, 0.15061331017522303, 0.8633074083897911],
    [0.42568284906761966, 0.15387717886147595, 0.13274569219049295],
    [0.14521362774221494, 0.8504216155853024, 0.5731849172372788],
    [0.8413464532210032, 0.6353919304745116, 0.8631702830220094],
    [0.8436647684331156, 0.13916315564113924, 0.5760391992235786],
    [0.15624701742534436, 0.5964016834884268, 0.14317340548726493],
    [0.4635853688510696, 0.44157800191591456, 0.5454316821338924],
    [0.8511503511680812, 0.37716337068113437, 0.1771777160122714],
    [0.6117063159103103, 0.8471292116309288, 0.5499814191479298],
    [0.14174874760433792, 0.13739449211068433, 0.44819156266346527],
    [0.17070570356709858, 0.550413655093214, 0.8484402578775007],
    [0.6251250327444107, 0.2856286481480126, 0.8586701580511867],
    [0.40626257936484356, 0.8581170067287871, 0.2156706044430961],
    [0.8026817552583493, 0.5486005901333907, 0.4999811481063665],
    [0.49475233880907443, 0.7463830890853818, 0.8672543078095071],
    [0.5005565281382417, 0.5207132479404125, 0.14167204609187672],
    [0.46522493302207846, 0.1337449598471096, 0.6542130912824399],
    [0.152387842697421, 0.4793829243705434, 0.47822434930121216],
    [0.6335445996713178, 0.25991230436315194, 0.36909586249591586],
    [0.13969354648420054, 0.24762962862900137, 0.15707157962569773],
    [0.8660925050729233, 0.8542956759016929, 0.6871736111685988],
    [0.13766884244560293, 0.8259143800318304, 0.2985834463354914],
    [0.4202472965479098, 0.6902260934979554, 0.42086013673403155],
    [0.33070449719062567, 0.36948073587086816, 0.29823888773822904],
    [0.8469323082264892, 0.38744782917012033, 0.7062754800158956],
    [0.623609219189152, 0.5569750621452655, 0.7330665721068821],
    [0.8440467122669996, 0.865803757954111, 0.42282074565234373],
    [0.2528800777309192, 0.3019838943034162, 0.6482730776403182],
    [0.8610582790006451, 0.1640530914103133, 0.8650390272950872],
    [0.7480720520072267, 0.13274569219049295, 0.1661234737566908],
    [0.7279932333806785, 0.6036100913785664, 0.2512217168216826],
    [0.3451789191235266, 0.6432268705738352, 0.671142950817279],
    [0.4020861292821648, 0.13274569219049295, 0.3963407040305754],
    [0.25479432329373836, 0.8472501159931141, 0.8149859745206727],
    [0.4067123933171095, 0.4318735787409099, 0.8213336558742174],
    [0.506692957699751, 0.7196276443325549, 0.13505637270307314],
    [0.7766647399933995, 0.13726746615267044, 0.8633025661857776],
    [0.13706756531259845, 0.6540482089224867, 0.8602414303045373],
    [0.8640629379614054, 0.8515731188081433, 0.8457660376372035],
    [0.13097002139300587, 0.1478870327552546, 0.29114303595101093],
    [0.8482760692855704, 0.14069183663629745, 0.18494823013084175],
    [0.22654006162242946, 0.14867370402039615, 0.8647615289580196],
    [0.5635953332375395, 0.4648582185422796, 0.5602827525317212],
    [0.14996907328261694, 0.8378753325005427, 0.42734459058742047],
    [0.8502390064992856, 0.7892666377361831, 0.40900514022767265],
    [0.4828217657525421, 0.8460291382034402, 0.6905545377428051],
    [0.4901974840819252, 0.3452918665628477, 0.19353743670386622],
    [0.1547960843176095, 0.45857657544090646, 0.5402117011288508],
    [0.19423983392638525, 0.5332784768246867, 0.18034013924474368],
    [0.8218730675029026, 0.547599982726288, 0.1410437236199658],
    [0.8683731869494954, 0.5040309399778512, 0.8386815994080259],
    [0.8085464466167581, 0.2202056392806572, 0.5280507478990578],
    [0.408489155515135, 0.1587084356213179, 0.5611465713678553],
    [0.41155509401436785, 0.47741246671789794, 0.8688853890578504],
    [0.24344064605711874, 0.862498627882363, 0.14540470904057737],
    [0.5276666182542104, 0.8594889381859636, 0.40303189053630817],
    [0.8657488763232264, 0.5026378090553695, 0.4960475167910292],
    [0.756367313976385, 0.854769180079499, 0.1337786685735718],
    [0.6242020078372886, 0.6559760541524939, 0.8523815820678434],
    [0.3962394347628009, 0.6179483882913934, 0.38611565420490446],
    [0.4999708688128578, 0.16687565826408635, 0.8608360239702042],
    [0.2133644520037505, 0.8675086615507214, 0.6905848660972798],
    [0.15163044397534045, 0.192275470815537, 0.6037979653102823],
    [0.3352918019949592, 0.6345109035042954, 0.640340717513862],
    [0.16913305495484798, 0.39814512445166916, 0.8092125509540524],
    [0.6676185761796697, 0.6019498275928037, 0.3563482481276862],
    [0.7124019697489334, 0.6891515159881422, 0.6079787558454088],
    [0.5912189576036379, 0.14904532324844033, 0.3737168938449591],
    [0.6428815297376597, 0.3771579908278941, 0.7978235194587444],
    [0.7316343521556293, 0.3555406906241061, 0.2946106099738287],
    [0.30812885216513847, 0.3191366434854982, 0.3800300739201581],
    [0.3476571054997909, 0.13097002139300587, 0.1449475903222011],
    [0.18750756194117438, 0.2081223812234289, 0.6123237082907259],
    [0.8399714753728836, 0.8706470207614406, 0.14196709959299683],
    [0.49045852318174044, 0.8738208773118012, 0.8465474081244918],
    [0.8564354022068504, 0.12803047429005168, 0.19806669193322002],
    [0.14032752672358745, 0.7694556070334525, 0.17608105796030785],
    [0.8138420547729419, 0.24289840467080948, 0.8551770393460919],
    [0.5773146269785313, 0.5150177766379586, 0.4601422328307194],
    [0.23570471621760664, 0.2735828970863584, 0.12631086598620755],
    [0.15503987730643226, 0.652069601849252, 0.6174241734039521],
    [0.8547124810230999, 0.8744559164279061, 0.6106988437391461],
    [0.4149739885535575, 0.4315961543793788, 0.8651623910181653],
    [0.5288560930566819, 0.13585119694954303, 0.43591348747565495],
    [0.7776391768150971, 0.4927971033965135, 0.14132331018397698],
    [0.45221498594208476, 0.874133423514683, 0.45169224287962684],
    [0.7474483867690734, 0.6012022817406787, 0.8552533107422041],
    [0.48993093501061447, 0.7238173789096218, 0.1309043279497195],
    [0.8588082675176361, 0.27339260311259217, 0.5253798328939736],
    [0.48871067802064094, 0.13356126066131416, 0.7497824788195048],
    [0.13403440409767425, 0.434721771015418, 0.39225603046432644],
    [0.5440976214564791, 0.2200454812514499, 0.12613546251646088],
    [0.18782871098725226, 0.8211104782698267, 0.874409151356023],
    [0.8557917085509777, 0.6626417589112288, 0.3851152151307131],
    [0.12564499015908054, 0.41856023232530093, 0.8016054162525494],
    [0.3821723342682154, 0.4903760526444947, 0.2553287673801641],
    [0.231532323722978, 0.13291222062185384, 0.8699535894290376],
    [0.6535242165651831, 0.38750340490517776, 0.6898100876534202],
    [0.3510857177274187, 0.42912955504230366, 0.5737248150426383],
    [0.5246107510789793, 0.6267268786303163, 0.7119763033752449],
    [0.1649506994000751, 0.13453716543079558, 0.35986162484640327],
    [0.14917698925431822, 0.8613466603683193, 0.41152091931273516],
    [0.7452022958069117, 0.8646720409451518, 0.8709252518077155],
    [0.684386405774379, 0.30519029920839047, 0.3248579332145094],
    [0.6471202758333512, 0.8340883115329727, 0.2985466106905198],
    [0.8210689940624296, 0.5725876163918291, 0.6169122215683934],
    [0.32332561826941947, 0.6596128511322774, 0.43122998321902695],
    [0.6562484770518081, 0.7422657161544202, 0.5320664219325764],
    [0.30819193502115444, 0.8474742940128793, 0.6556332130093698],
    [0.15600982348660486, 0.5201758062564827, 0.1504103188971217],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.125, 0.125, 0.125],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.375, 0.875],
    [0.125, 0.625, 0.125],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.625],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.125, 0.875, 0.625],
    [0.125, 0.875, 0.875],
    [0.5, 0.125, 0.125],
    [0.5, 0.125, 0.375],
    [0.5, 0.125, 0.625],
    [0.5, 0.125, 0.875],
    [0.5, 0.375, 0.125],
    [0.5, 0.375, 0.375],
    [0.5, 0.375, 0.625],
    [0.5, 0.375, 0.875],
    [0.5, 0.625, 0.125],
    [0.5, 0.625, 0.375],
    [0.5, 0.625, 0.625],
    [0.5, 0.625, 0.875],
    [0.5, 0.875, 0.125],
    [0.5, 0.875, 0.375],
    [0.5, 0.875, 0.625],
    [0.5, 0.875, 0.875],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.375],
    [0.875, 0.125, 0.625],
    [0.875, 0.125, 0.875],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.875, 0.375, 0.625],
    [0.875, 0.375, 0.875],
    [0.875, 0.625, 0.125],
    [0.875, 0.625, 0.375],
    [0.875, 0.625, 0.625],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.375],
    [0.875, 0.875, 0.625],
    [0.875, 0.875, 0.875],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.875, 0.375, 0.125],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.875, 0.375, 0.875],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.875, 0.375, 0.875],
    [0.875, 0.625, 0.375],
    [0.125, 0.125, 0.125],
    [0.875, 0.875, 0.875],
    [0.125, 0.375, 0.875],
    [0.375, 0.875, 0.125],
    [0.875, 0.125, 0.375],
    [0.125, 0.875, 0.625],
    [0.625, 0.125, 0.875],
    [0.875, 0.625, 0.125],
    [0.625, 0.625, 0.625],
    [0.375, 0.375, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.625, 0.125],
    [0.375, 0.625, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.875, 0.375],
    [0.875, 0.375, 0.625],
    [0.125, 0.625, 0.625],
    [0.125, 0.875, 0.875],
    [0.625, 0.125, 0.625],
    [0.625, 0.625, 0.125],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.875],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.625],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.375],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.625],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.625],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.875, 0.375, 0.875],
    [0.875, 0.625, 0.375],
    [0.875, 0.625, 0.625],
    [0.125, 0.125, 0.125],
    [0.125, 0.125, 0.375],
    [0.125, 0.125, 0.625],
    [0.125, 0.125, 0.875],
    [0.125, 0.375, 0.125],
    [0.125, 0.375, 0.375],
    [0.125, 0.375, 0.625],
    [0.125, 0.375, 0.875],
    [0.125, 0.625, 0.125],
    [0.125, 0.625, 0.375],
    [0.125, 0.625, 0.625],
    [0.125, 0.625, 0.875],
    [0.125, 0.875, 0.125],
    [0.125, 0.875, 0.375],
    [0.125, 0.875, 0.625],
    [0.125, 0.875, 0.875],
    [0.375, 0.125, 0.125],
    [0.375, 0.125, 0.375],
    [0.375, 0.125, 0.625],
    [0.375, 0.125, 0.875],
    [0.375, 0.375, 0.125],
    [0.375, 0.375, 0.375],
    [0.375, 0.375, 0.625],
    [0.375, 0.375, 0.875],
    [0.375, 0.625, 0.125],
    [0.375, 0.625, 0.375],
    [0.375, 0.625, 0.625],
    [0.375, 0.625, 0.875],
    [0.375, 0.875, 0.125],
    [0.375, 0.875, 0.375],
    [0.375, 0.875, 0.625],
    [0.375, 0.875, 0.875],
    [0.625, 0.125, 0.125],
    [0.625, 0.125, 0.375],
    [0.625, 0.125, 0.625],
    [0.625, 0.125, 0.875],
    [0.625, 0.375, 0.125],
    [0.625, 0.375, 0.375],
    [0.625, 0.375, 0.625],
    [0.625, 0.375, 0.875],
    [0.625, 0.625, 0.125],
    [0.625, 0.625, 0.375],
    [0.625, 0.625, 0.625],
    [0.625, 0.625, 0.875],
    [0.625, 0.875, 0.125],
    [0.625, 0.875, 0.375],
    [0.625, 0.875, 0.625],
    [0.625, 0.875, 0.875],
    [0.875, 0.125, 0.125],
    [0.875, 0.125, 0.375],
    [0.875, 0.125, 0.625],
    [0.875, 0.125, 0.875],
    [0.875, 0.375, 0.125],
    [0.875, 0.375, 0.375],
    [0.875, 0.375, 0.625],
    [0.875, 0.375, 0.875],
    [0.875, 0.625, 0.125],
    [0.875, 0.625, 0.375],
    [0.875, 0.625, 0.625],
    [0.875, 0.625, 0.875],
    [0.875, 0.875, 0.125],
    [0.875, 0.875, 0.375],
    [0.875, 0.875, 0.625],
    [0.875, 0.875, 0.875],
];

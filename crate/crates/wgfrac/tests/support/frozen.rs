// Reference values from tools/gen_oracles.py (mpmath, 40 digits). Do not edit by hand.
#![allow(dead_code, clippy::excessive_precision)]

pub const ML: &[(f64, f64, f64, f64)] = &[
    (0.1, 1.0, -0.3, 0.7596125317784889446),
    (0.1, 1.0, -1.0, 0.48556446431108210159),
    (0.1, 1.0, -2.5, 0.27335667076010758331),
    (0.1, 1.0, -7.0, 0.11814979286247342807),
    (0.1, 1.0, -15.0, 5.8783452847323404659e-2),
    (0.1, 1.0, -29.0, 3.1277568223513338326e-2),
    (0.1, 2.0, -0.3, 0.77696054336945158075),
    (0.1, 2.0, -1.0, 0.5105935387916558991),
    (0.1, 2.0, -2.5, 0.29414772942393699797),
    (0.1, 2.0, -7.0, 0.12942585517749068101),
    (0.1, 2.0, -15.0, 6.4850444028624192925e-2),
    (0.1, 2.0, -29.0, 3.4620526148206833596e-2),
    (0.1, 3.0, -0.3, 0.39269677945694773217),
    (0.1, 3.0, -1.0, 0.26153959565186614682),
    (0.1, 3.0, -2.5, 0.15237531235257065185),
    (0.1, 3.0, -7.0, 6.7638755586512450584e-2),
    (0.1, 3.0, -15.0, 3.4010485219473770696e-2),
    (0.1, 3.0, -29.0, 1.8186645632145263484e-2),
    (0.1, 0.5, -0.3, 0.41461522803123174229),
    (0.1, 0.5, -1.0, 0.25434503234937213449),
    (0.1, 0.5, -2.5, 0.13830003296551773343),
    (0.1, 0.5, -7.0, 5.8173464070653099651e-2),
    (0.1, 0.5, -15.0, 2.8631761614878596518e-2),
    (0.1, 0.5, -29.0, 1.5156974274337618435e-2),
    (0.1, 1.7, -0.3, 0.85104596073472751371),
    (0.1, 1.7, -1.0, 0.55603672704881190533),
    (0.1, 1.7, -2.5, 0.31877428787029190057),
    (0.1, 1.7, -7.0, 0.13973274446270622978),
    (0.1, 1.7, -15.0, 6.9909926672693381531e-2),
    (0.1, 1.7, -29.0, 3.7295216375231986617e-2),
    (0.1, 1.0, 0.5, 2.0770042471194151855),
    (0.25, 1.0, -0.3, 0.7475917733762233886),
    (0.25, 1.0, -1.0, 0.46385276080171328694),
    (0.25, 1.0, -2.5, 0.25256463488894419206),
    (0.25, 1.0, -7.0, 0.10585848708784814563),
    (0.25, 1.0, -15.0, 5.1977231408360184762e-2),
    (0.25, 1.0, -29.0, 2.7480062495923252708e-2),
    (0.25, 2.0, -0.3, 0.78940809153282647528),
    (0.25, 2.0, -1.0, 0.52680149715805527858),
    (0.25, 2.0, -2.5, 0.30615989845481546721),
    (0.25, 2.0, -7.0, 0.13525385228637756331),
    (0.25, 2.0, -15.0, 6.7830831216729165526e-2),
    (0.25, 2.0, -29.0, 3.6221641259480821988e-2),
    (0.25, 3.0, -0.3, 0.40440373895637503545),
    (0.25, 3.0, -1.0, 0.2789104127973456399),
    (0.25, 3.0, -2.5, 0.16706492571640037751),
    (0.25, 3.0, -7.0, 7.5682602245831895535e-2),
    (0.25, 3.0, -15.0, 3.8349860054597285053e-2),
    (0.25, 3.0, -29.0, 2.0580061438199040678e-2),
    (0.25, 0.5, -0.3, 0.38665816142213750168),
    (0.25, 0.5, -1.0, 0.21199340525120659281),
    (0.25, 0.5, -2.5, 0.10259620385800003466),
    (0.25, 0.5, -7.0, 3.8912877164474555224e-2),
    (0.25, 0.5, -15.0, 1.8332563954853142235e-2),
    (0.25, 0.5, -29.0, 9.502908769585362744e-3),
    (0.25, 1.7, -0.3, 0.8592635347000135281),
    (0.25, 1.7, -1.0, 0.56501752892866691602),
    (0.25, 1.7, -2.5, 0.32403348446368878298),
    (0.25, 1.7, -7.0, 0.14160697122936229534),
    (0.25, 1.7, -15.0, 7.0705453756027696252e-2),
    (0.25, 1.7, -29.0, 3.7678124429719963152e-2),
    (0.25, 1.0, 0.5, 2.0796142210090508739),
    (0.25, 1.0, 3.0, 6.0243892583401221934e+35),
    (0.5, 1.0, -0.3, 0.73459933456765514992),
    (0.5, 1.0, -1.0, 0.42758357615580700441),
    (0.5, 1.0, -2.5, 0.21080636406114358065),
    (0.5, 1.0, -7.0, 7.980005432915293349e-2),
    (0.5, 1.0, -15.0, 3.7529606388505765746e-2),
    (0.5, 1.0, -29.0, 1.944326731822284258e-2),
    (0.5, 2.0, -0.3, 0.81236760773676572192),
    (0.5, 2.0, -1.0, 0.55596274325131957831),
    (0.5, 2.0, -2.5, 0.32508068508798800246),
    (0.5, 2.0, -7.0, 0.14241743314281103981),
    (0.5, 2.0, -15.0, 7.0947631612538641663e-2),
    (0.5, 2.0, -29.0, 3.7743685033398439341e-2),
    (0.5, 3.0, -0.3, 0.42270490173186923512),
    (0.5, 3.0, -1.0, 0.30821552131499462757),
    (0.5, 3.0, -2.5, 0.1929140208395481001),
    (0.5, 3.0, -7.0, 8.9962997542623191524e-2),
    (0.5, 3.0, -15.0, 4.6021063566967397247e-2),
    (0.5, 3.0, -29.0, 2.4795569855980945146e-2),
    (0.5, 0.5, -0.3, 0.34380978317745975013),
    (0.5, 0.5, -1.0, 0.13660600739194928254),
    (0.5, 0.5, -2.5, 3.717367339489733533e-2),
    (0.5, 0.5, -7.0, 5.589203243685752519e-3),
    (0.5, 0.5, -15.0, 1.2454877201698007572e-3),
    (0.5, 0.5, -29.0, 3.3483131929385212804e-4),
    (0.5, 1.7, -0.3, 0.87706199609139968025),
    (0.5, 1.7, -1.0, 0.58234985229015789801),
    (0.5, 1.7, -2.5, 0.329902637864396421),
    (0.5, 1.7, -7.0, 0.14058596399577719477),
    (0.5, 1.7, -15.0, 6.9253221639841851045e-2),
    (0.5, 1.7, -29.0, 3.6649231255659314501e-2),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 3.0, 1.6205988853999586625e+4),
    (0.7, 1.0, -0.3, 0.73154067570065076036),
    (0.7, 1.0, -1.0, 0.39961197811559939027),
    (0.7, 1.0, -2.5, 0.16863128667619575153),
    (0.7, 1.0, -7.0, 5.3335564803365709958e-2),
    (0.7, 1.0, -15.0, 2.3501440278040016091e-2),
    (0.7, 1.0, -29.0, 1.1849753931009401922e-2),
    (0.7, 2.0, -0.3, 0.83242327082022613415),
    (0.7, 2.0, -1.0, 0.58280466905639584944),
    (0.7, 2.0, -2.5, 0.34019239651001376983),
    (0.7, 2.0, -7.0, 0.1453006066337897282),
    (0.7, 2.0, -15.0, 7.1274674921895160304e-2),
    (0.7, 2.0, -29.0, 3.7620126178355122294e-2),
    (0.7, 3.0, -0.3, 0.43606811419771100843),
    (0.7, 3.0, -1.0, 0.33204738302795587505),
    (0.7, 3.0, -2.5, 0.2152911381720985202),
    (0.7, 3.0, -7.0, 0.10222334141136913772),
    (0.7, 3.0, -15.0, 5.2439107579408571391e-2),
    (0.7, 3.0, -29.0, 2.8262784138360926811e-2),
    (0.7, 0.5, -0.3, 0.31480032993380281606),
    (0.7, 0.5, -1.0, 6.9138974339373653112e-2),
    (0.7, 0.5, -2.5, -2.5112245107021002062e-2),
    (0.7, 0.5, -7.0, -2.1109039944000532887e-2),
    (0.7, 0.5, -15.0, -1.0890584099142690444e-2),
    (0.7, 0.5, -29.0, -5.7925007824682299713e-3),
    (0.7, 1.7, -0.3, 0.89486441433116416526),
    (0.7, 1.7, -1.0, 0.60038802188440060973),
    (0.7, 1.7, -2.5, 0.33254748532952169939),
    (0.7, 1.7, -7.0, 0.13523777645666204143),
    (0.7, 1.7, -15.0, 6.5099903981463998927e-2),
    (0.7, 1.7, -29.0, 3.4074146416172089589e-2),
    (0.7, 1.0, 0.5, 1.8249850568512024814),
    (0.7, 1.0, 3.0, 1.7419304297541545683e+2),
    (0.8, 1.0, -0.3, 0.73274640256857662948),
    (0.8, 1.0, -1.0, 0.38694857861897684617),
    (0.8, 1.0, -2.5, 0.14341738258439232538),
    (0.8, 1.0, -7.0, 3.786133339668489778e-2),
    (0.8, 1.0, -15.0, 1.584380074779079787e-2),
    (0.8, 1.0, -29.0, 7.8488901960317967438e-3),
    (0.8, 2.0, -0.3, 0.84283372201476714505),
    (0.8, 2.0, -1.0, 0.59790131634080448615),
    (0.8, 2.0, -2.5, 0.34824439523135204164),
    (0.8, 2.0, -7.0, 0.14553444235636875687),
    (0.8, 2.0, -15.0, 7.0521080633317826889e-2),
    (0.8, 2.0, -29.0, 3.7008654243648764335e-2),
    (0.8, 3.0, -0.3, 0.44225605279349965839),
    (0.8, 3.0, -1.0, 0.34404041745096001646),
    (0.8, 3.0, -2.5, 0.22724763743012146656),
    (0.8, 3.0, -7.0, 0.10868112494239949299),
    (0.8, 3.0, -15.0, 5.5700076818918996598e-2),
    (0.8, 3.0, -29.0, 2.9984310879817656562e-2),
    (0.8, 0.5, -0.3, 0.30289444008633402689),
    (0.8, 0.5, -1.0, 3.2700864517895546967e-2),
    (0.8, 0.5, -2.5, -6.2311496849653919729e-2),
    (0.8, 0.5, -7.0, -3.3868120459553649497e-2),
    (0.8, 0.5, -15.0, -1.5784915551780245864e-2),
    (0.8, 0.5, -29.0, -8.0827919091532009695e-3),
    (0.8, 1.7, -0.3, 0.90480820067229594404),
    (0.8, 1.7, -1.0, 0.61158529883317562038),
    (0.8, 1.7, -2.5, 0.33352516010289079624),
    (0.8, 1.7, -7.0, 0.13064061745019161399),
    (0.8, 1.7, -15.0, 6.1839440357569729161e-2),
    (0.8, 1.7, -29.0, 3.2133018153063406418e-2),
    (0.8, 1.0, 0.5, 1.7632036743667130258),
    (0.8, 1.0, 3.0, 6.4751787985702501649e+1),
    (0.9, 1.0, -0.3, 0.73584527664843058747),
    (0.9, 1.0, -1.0, 0.37606602142464187902),
    (0.9, 1.0, -2.5, 0.11469986754557784504),
    (0.9, 1.0, -7.0, 2.0553253921495637885e-2),
    (0.9, 1.0, -15.0, 7.928602432344447057e-3),
    (0.9, 1.0, -29.0, 3.8499235773795887244e-3),
    (0.9, 2.0, -0.3, 0.85337491950020290447),
    (0.9, 2.0, -1.0, 0.61431564477296476897),
    (0.9, 2.0, -2.5, 0.35706465352786312944),
    (0.9, 2.0, -7.0, 0.14475731217137149668),
    (0.9, 2.0, -15.0, 6.902807705178662397e-2),
    (0.9, 2.0, -29.0, 3.5976833265978673257e-2),
    (0.9, 3.0, -0.3, 0.44808450407134960429),
    (0.9, 3.0, -1.0, 0.35601247954629361984),
    (0.9, 3.0, -2.5, 0.23983413299149481271),
    (0.9, 3.0, -7.0, 0.1154070761140576048),
    (0.9, 3.0, -15.0, 5.8969759401340395671e-2),
    (0.9, 3.0, -29.0, 3.167007896003113135e-2),
    (0.9, 0.5, -0.3, 0.29316702779466012339),
    (0.9, 0.5, -1.0, -5.0172483148519469026e-3),
    (0.9, 0.5, -2.5, -0.10599485592084563889),
    (0.9, 0.5, -7.0, -4.5611227298727524804e-2),
    (0.9, 0.5, -15.0, -1.9387796675147188254e-2),
    (0.9, 0.5, -29.0, -9.6389087818759915105e-3),
    (0.9, 1.7, -0.3, 0.91531863035598898529),
    (0.9, 1.7, -1.0, 0.62464511654730404296),
    (0.9, 1.7, -2.5, 0.3346595099382402624),
    (0.9, 1.7, -7.0, 0.12441001940389251264),
    (0.9, 1.7, -15.0, 5.767315141523207015e-2),
    (0.9, 1.7, -29.0, 2.9729482732339067873e-2),
    (0.9, 1.0, 0.5, 1.7043087220993991136),
    (0.9, 1.0, 3.0, 3.2921897176850824779e+1),
    (0.95, 1.0, -0.3, 0.73810125336911590138),
    (0.95, 1.0, -1.0, 0.37157362003067881398),
    (0.95, 1.0, -2.5, 9.8886431223165562401e-2),
    (0.95, 1.0, -7.0, 1.107132677479970829e-2),
    (0.95, 1.0, -15.0, 3.9444851648296799484e-3),
    (0.95, 1.0, -29.0, 1.895380107856948642e-3),
    (0.95, 2.0, -0.3, 0.85866116761840748946),
    (0.95, 2.0, -1.0, 0.62304324120743175269),
    (0.95, 2.0, -2.5, 0.36191637456271609652),
    (0.95, 2.0, -7.0, 0.14391781986601858409),
    (0.95, 2.0, -15.0, 6.7965423606461379735e-2),
    (0.95, 2.0, -29.0, 3.5290181651538772077e-2),
    (0.95, 3.0, -0.3, 0.45085818210913988324),
    (0.95, 3.0, -1.0, 0.36196519498841951168),
    (0.95, 3.0, -2.5, 0.24639040646293609044),
    (0.95, 3.0, -7.0, 0.11888991980964685824),
    (0.95, 3.0, -15.0, 6.0600081161146887201e-2),
    (0.95, 3.0, -29.0, 3.249153617604159865e-2),
    (0.95, 0.5, -0.3, 0.28921317806910587661),
    (0.95, 0.5, -1.0, -2.4051750909723418457e-2),
    (0.95, 0.5, -2.5, -0.13107594249180063314),
    (0.95, 0.5, -7.0, -5.0842306117599230758e-2),
    (0.95, 0.5, -15.0, -2.0530981906433404448e-2),
    (0.95, 0.5, -29.0, -1.0085202716302597835e-2),
    (0.95, 1.7, -0.3, 0.92074747083813829933),
    (0.95, 1.7, -1.0, 0.63195664820457446632),
    (0.95, 1.7, -2.5, 0.33545071458180947883),
    (0.95, 1.7, -7.0, 0.12055209981934299638),
    (0.95, 1.7, -15.0, 5.5217300084024536483e-2),
    (0.95, 1.7, -29.0, 2.8350562604231137625e-2),
    (0.95, 1.0, 0.5, 1.6760890928135578307),
    (0.95, 1.0, 3.0, 2.5265191896168438968e+1),
    (0.99, 1.0, -0.3, 0.74023850142995859238),
    (0.99, 1.0, -1.0, 0.3685483180603396169),
    (0.99, 1.0, -2.5, 8.5522799596113517973e-2),
    (0.99, 1.0, -7.0, 3.0045409969559606537e-3),
    (0.99, 1.0, -15.0, 7.8316696851676205515e-4),
    (0.99, 1.0, -29.0, 3.7314408831832588634e-4),
    (0.99, 2.0, -0.3, 0.86288497308249714758),
    (0.99, 2.0, -1.0, 0.63027731695026152047),
    (0.99, 2.0, -2.5, 0.36608003844771271154),
    (0.99, 2.0, -7.0, 0.1429953489717065661),
    (0.99, 2.0, -15.0, 6.694633918554602697e-2),
    (0.99, 2.0, -29.0, 3.465414763821231632e-2),
    (0.99, 3.0, -0.3, 0.4530080187982090367),
    (0.99, 3.0, -1.0, 0.36670030563203801041),
    (0.99, 3.0, -2.5, 0.25176969821463267396),
    (0.99, 3.0, -7.0, 0.12174378419272841705),
    (0.99, 3.0, -15.0, 6.1898667386007154483e-2),
    (0.99, 3.0, -29.0, 3.3135009947419849745e-2),
    (0.99, 0.5, -0.3, 0.28651493696262251828),
    (0.99, 0.5, -1.0, -3.9204316634988052128e-2),
    (0.99, 0.5, -2.5, -0.15302467806266087705),
    (0.99, 0.5, -7.0, -5.4586839156918983963e-2),
    (0.99, 0.5, -15.0, -2.1045954775315674306e-2),
    (0.99, 0.5, -29.0, -1.0262312814065092707e-2),
    (0.99, 1.7, -0.3, 0.92515808194338596225),
    (0.99, 1.7, -1.0, 0.6382040153140500749),
    (0.99, 1.7, -2.5, 0.3362769661819889406),
    (0.99, 1.7, -7.0, 0.1170430168403889445),
    (0.99, 1.7, -15.0, 5.3060211520481999861e-2),
    (0.99, 1.7, -29.0, 2.7162089377162135963e-2),
    (0.99, 1.0, 0.5, 1.6541261938718982692),
    (0.99, 1.0, 3.0, 2.0976948519286249858e+1),
    (0.1, 1.0, -40.0, 2.2869412718031259351e-2),
    (0.1, 1.0, -100.0, 9.2726572313118582982e-3),
    (0.1, 1.0, -1000.0, 9.3492055360589073502e-4),
    (0.3, 1.0, -40.0, 1.8979521266478697338e-2),
    (0.3, 1.0, -100.0, 7.658856222286641491e-3),
    (0.3, 1.0, -1000.0, 7.6993246495257769278e-4),
    (0.5, 1.0, -40.0, 1.4100335983377813625e-2),
    (0.5, 1.0, -100.0, 5.6416137829894329036e-3),
    (0.5, 1.0, -1000.0, 5.641893014533876542e-4),
    (0.7, 1.0, -40.0, 8.5261702309107443824e-3),
    (0.7, 1.0, -100.0, 3.3696874163059942732e-3),
    (0.7, 1.0, -1000.0, 3.3454145717409959777e-4),
    (0.9, 1.0, -40.0, 2.743449697792099487e-3),
    (0.9, 1.0, -100.0, 1.0689724182870890385e-3),
    (0.9, 1.0, -1000.0, 1.0528835943209589052e-4),
    (1.3, 1.0, -0.5, 0.63300793500239903929),
    (1.3, 1.0, -3.0, -8.4672263992044021436e-2),
    (1.3, 1.0, -10.0, -4.0670092992621639599e-2),
    (1.3, 1.0, 2.0, 4.2917217536157314126),
    (1.5, 1.0, -0.5, 0.66323679487242795678),
    (1.5, 1.0, -3.0, -0.17556537379997824292),
    (1.5, 1.0, -10.0, -0.10971305425274014669),
    (1.5, 1.0, 2.0, 3.3487008963183954036),
    (1.8, 1.0, -0.5, 0.71992993686215541459),
    (1.8, 1.0, -3.0, -0.21891138756102455347),
    (1.8, 1.0, -10.0, -0.56057491254512572606),
    (1.8, 1.0, 2.0, 2.5273175608171323379),
    (2.5, 1.0, -0.5, 0.85162388824386676372),
    (2.5, 1.0, -3.0, 0.17039500297937831007),
    (2.5, 1.0, -10.0, -1.2442332043062486853),
    (2.5, 1.0, 2.0, 1.6357100113470297685),
    (1.0000001, 1.0, -5.0, 6.7379163643132973233e-3),
    (1.0000001, 1.0, -15.0, 2.9809322197180452924e-7),
    (1.0000001, 1.0, -29.0, -3.7145753102041935762e-9),
    (1.0000001, 2.0, -5.0, 0.19865241038126192295),
    (1.0000001, 2.0, -15.0, 6.6666643424831677415e-2),
    (1.0000001, 2.0, -29.0, 3.44827568817025899e-2),
    (1.0000001, 3.0, -5.0, 0.16026952764860950202),
    (1.0000001, 3.0, -15.0, 6.2222226814836931527e-2),
    (1.0000001, 3.0, -29.0, 3.329369956082086029e-2),
    (1.0000001, 0.4, -5.0, -9.2738277123779577884e-2),
    (1.0000001, 0.4, -15.0, -2.0413699353518692602e-2),
    (1.0000001, 0.4, -29.0, -9.8950158536167214561e-3),
    (1.001, 1.0, -5.0, 6.4312605504766170637e-3),
    (1.001, 1.0, -15.0, -7.7764470306063593811e-5),
    (1.001, 1.0, -29.0, -3.7131281963083276827e-5),
    (1.001, 2.0, -5.0, 0.19865018120442270511),
    (1.001, 2.0, -15.0, 6.6638111030463388228e-2),
    (1.001, 2.0, -29.0, 3.446534368202202649e-2),
    (1.001, 3.0, -5.0, 0.1603672436086223296),
    (1.001, 3.0, -15.0, 6.2254551480427384259e-2),
    (1.001, 3.0, -29.0, 3.3309515491806320373e-2),
    (1.001, 0.4, -5.0, -9.2915850854052263978e-2),
    (1.001, 0.4, -15.0, -2.0396905005961773835e-2),
    (1.001, 0.4, -29.0, -9.8863659524071111601e-3),
    (1.1, 1.0, -5.0, -2.7841073916427898288e-2),
    (1.1, 1.0, -15.0, -7.4774069276136703997e-3),
    (1.1, 1.0, -29.0, -3.5056511794186533796e-3),
    (1.1, 2.0, -5.0, 0.19806650789679703617),
    (1.1, 2.0, -15.0, 6.3264517538405639255e-2),
    (1.1, 2.0, -29.0, 3.2486311719431351827e-2),
    (1.1, 3.0, -5.0, 0.17047177964786316719),
    (1.1, 3.0, -15.0, 6.5421540105593764008e-2),
    (1.1, 3.0, -29.0, 3.4822195100798555935e-2),
    (1.1, 0.4, -5.0, -0.11235185998096496708),
    (1.1, 0.4, -15.0, -1.7046551776999987308e-2),
    (1.1, 0.4, -29.0, -8.4617426973621677556e-3),
    (1.5, 1.0, -5.0, -0.3000820504131308808),
    (1.5, 1.0, -15.0, 1.5536484967868308042e-2),
    (1.5, 1.0, -29.0, -1.3342009011409273025e-2),
    (1.5, 2.0, -5.0, 0.20456444300647947614),
    (1.5, 2.0, -15.0, 2.6890068046407014801e-2),
    (1.5, 2.0, -29.0, 2.0648734917761386903e-2),
    (1.5, 3.0, -5.0, 0.22476789171981343889),
    (1.5, 3.0, -15.0, 7.6151391129474834648e-2),
    (1.5, 3.0, -29.0, 3.8837642510922877887e-2),
    (1.5, 0.4, -5.0, -0.43395516750251613906),
    (1.5, 0.4, -15.0, 0.19310633457352135519),
    (1.5, 0.4, -29.0, -4.1045624938769988856e-2),
    (2.2, 1.0, -5.0, -0.5545077519780949798),
    (2.2, 1.0, -15.0, -1.426302465178730901),
    (2.2, 1.0, -29.0, -0.23711948493359499764),
    (2.2, 2.0, -5.0, 0.45224035882833987159),
    (2.2, 2.0, -15.0, -0.17398211618786996508),
    (2.2, 2.0, -29.0, -0.38495762486099410157),
    (2.2, 3.0, -5.0, 0.36192667898637681335),
    (2.2, 3.0, -15.0, 0.16479437022619744331),
    (2.2, 3.0, -29.0, 1.7226693255715702917e-2),
    (2.2, 0.4, -5.0, -1.8089431723965785246),
    (2.2, 0.4, -15.0, -1.375074452872179583),
    (2.2, 0.4, -29.0, 2.9024770111639992099),
    (2.9, 1.0, -5.0, 0.10615604531461952136),
    (2.9, 1.0, -15.0, -1.3953741497781859236),
    (2.9, 1.0, -29.0, -2.9063671687889399238),
    (2.9, 2.0, -5.0, 0.76540696074631990314),
    (2.9, 2.0, -15.0, 0.33899512756424062878),
    (2.9, 2.0, -29.0, -0.16736829581308284043),
    (2.9, 3.0, -5.0, 0.45156978719907932697),
    (2.9, 3.0, -15.0, 0.36024996070751363203),
    (2.9, 3.0, -29.0, 0.24432285957367988883),
    (2.9, 0.4, -5.0, -1.2673689126616024304),
    (2.9, 0.4, -15.0, -3.8771303160076491106),
    (2.9, 0.4, -29.0, -5.8624301468355927133),
    (2.9999, 1.0, -5.0, 0.20095381926323255237),
    (2.9999, 1.0, -15.0, -1.1968986400175252078),
    (2.9999, 1.0, -29.0, -2.731239861623770499),
    (2.9999, 2.0, -5.0, 0.79656323394101768644),
    (2.9999, 2.0, -15.0, 0.41864410487537543735),
    (2.9999, 2.0, -29.0, -4.8195948372536262422e-2),
    (2.9999, 3.0, -5.0, 0.45894340249443721907),
    (2.9999, 3.0, -15.0, 0.38047738492091856573),
    (2.9999, 3.0, -29.0, 0.27855578604855920883),
    (2.9999, 0.4, -5.0, -1.1239853178065509712),
    (2.9999, 0.4, -15.0, -3.6814254600125746777),
    (2.9999, 0.4, -29.0, -6.0327197447923650687),
    (1.25, 1.0, -103.74802091184496, -2.0066201368961419604e-3),
    (1.25, 1.0, -166.98946102282443, -1.2370949700286931425e-3),
    (1.25, 2.0, -103.74802091184496, 7.892213515030048737e-3),
    (1.25, 2.0, -166.98946102282443, 4.8970228545740887106e-3),
    (1.25, 1.3, -103.74802091184496, 4.7498141131342798483e-4),
    (1.25, 1.3, -166.98946102282443, 2.999592498405835851e-4),
    (1.3323344387109985, 1.0, -140.85344534341556, -1.7656321909921037708e-3),
    (1.3323344387109985, 1.0, -233.9333543210391, -1.05809652032933019e-3),
    (1.3323344387109985, 2.0, -140.85344534341556, 5.2624334959416942237e-3),
    (1.3323344387109985, 2.0, -233.9333543210391, 3.1655476752368342547e-3),
    (1.3323344387109985, 1.3, -140.85344534341556, -2.4324875806725023345e-4),
    (1.3323344387109985, 1.3, -233.9333543210391, -1.4206416573975177577e-4),
    (1.5, 1.0, -262.5280937347468, -1.0743286402248041493e-3),
    (1.5, 1.0, -464.75800154489, -6.0693449579770155686e-4),
    (1.5, 2.0, -262.5280937347468, 2.1490052416008199774e-3),
    (1.5, 2.0, -464.75800154489, 1.2139321671807188669e-3),
    (1.5, 1.3, -262.5280937347468, -6.6004632723460466056e-4),
    (1.5, 1.3, -464.75800154489, -3.7145438916870436525e-4),
    (2.2, 1.0, -3532.8441959815964, -3.0064596568101729792e+2),
    (2.2, 1.0, -8164.559358957802, -4.4363474524677704558e+3),
    (2.2, 2.0, -3532.8441959815964, 0.8718780457394800472),
    (2.2, 2.0, -8164.559358957802, 1.2194712124589356732e+1),
    (2.2, 1.3, -3532.8441959815964, -7.8942473427171760848e+1),
    (2.2, 1.3, -8164.559358957802, -1.014043024876964416e+3),
    (1.0, 0.5, -0.4, 0.21595933021179967701),
    (1.0, 0.5, -3.0, -0.14740544177658248956),
    (1.0, 0.5, -20.0, -1.5325407164895395749e-2),
    (1.0, 0.5, -80.0, -3.5944628464370339631e-3),
    (1.0, 1.7, -0.4, 0.87614060291253305754),
    (1.0, 1.7, -3.0, 0.28318692263791899356),
    (1.0, 1.7, -20.0, 3.9139749585140472449e-2),
    (1.0, 1.7, -80.0, 9.6665059323575193143e-3),
    (1.0, 4.2, -0.4, 0.11752955858780122904),
    (1.0, 4.2, -3.0, 7.2029752395744462339e-2),
    (1.0, 4.2, -20.0, 1.8493066176247621291e-2),
    (1.0, 4.2, -80.0, 5.0171478629250023773e-3),
];

pub const GAMMA: &[(f64, f64)] = &[
    (0.1, 9.5135076986687312858),
    (0.5, 1.7724538509055160273),
    (1.0, 1.0),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.7, 4.1706517837966040301),
    (7.25, 1.1553810139199896872e+3),
    (10.0, 3.6288e+5),
    (33.3, 7.4875775965226323274e+35),
    (100.5, 9.3209631040827166083e+156),
    (170.5, 5.5620924145599996107e+305),
    (-0.5, -3.5449077018110320546),
    (-2.3, -1.4471073942559181166),
    (-7.9, 3.1214593597195314304e-4),
];

pub const MOMENTS: &[(f64, f64, f64, f64, f64)] = &[
    (1.0, 1.0, 1.0, 0.6321205588285576784, 0.3678794411714423216),
    (0.8, 1.5, 0.7, 0.39603267471894168056, 0.16178060697115994352),
    (0.5, 9.0, 0.3, 5.7710832011429297284e-2, 1.0742969553558212815e-2),
    (0.3, 0.25, 2.0, 1.5790435497179930562, 1.6249793900041747291),
    (1.0, 0.0, 0.6, 0.5999999999999999778, 0.17999999999999998668),
];

pub const OPS_COS3T: &[(f64, f64, f64, f64, f64)] = &[
    (0.125, 1.3537615496311821068, 1.4701166037552720314, 0.63523458268733474804, 0.53458686680797113983),
    (0.25, 0.9326771985127156686, 1.2885538680361222775, 0.55818868237570968302, 0.35963599862682731721),
    (0.375, 0.41154765496843177074, 0.91773122854304609803, 0.39516313154330426573, 0.13628341701519709709),
    (0.5, -0.14783104891729880012, 0.40745715032263782069, 0.17158900916386417676, -0.10404058161943142573),
    (0.625, -0.67307502112268061457, -0.17392294368403131388, -8.0144199057384279173e-2, -0.32733160510562627581),
    (0.75, -1.0944844005434334094, -0.74990728545884938025, -0.3242549645670745262, -0.50148609901313595159),
    (0.875, -1.3557334007912881743, -1.249415452382075994, -0.52627186856180174798, -0.59987840925476250287),
];

pub const ML_HALF_ERFC: &[(f64, f64)] = &[
    (0.0, 1.0),
    (-0.5, 0.61569034419292587487),
    (-1.0, 0.42758357615580700441),
    (-1.5, 0.32158541645431750235),
    (-2.0, 0.25539567631050574387),
    (-2.5, 0.21080636406114358065),
    (-3.0, 0.17900115118138995042),
    (-3.5, 0.1552936556088942974),
    (-4.0, 0.13699945762506138989),
    (-4.5, 0.12248480427384141755),
    (-5.0, 0.11070463773306862637),
    (-5.5, 0.10096221839949908823),
    (-6.0, 9.2776567800538354389e-2),
    (-6.5, 8.5805670104894601778e-2),
    (-7.0, 7.980005432915293349e-2),
    (-7.5, 7.4573693062876683005e-2),
    (-8.0, 6.9985166200880927723e-2),
    (-8.5, 6.5925122499980351741e-2),
    (-9.0, 6.2307724037774684147e-2),
    (-9.5, 5.9064678352563890854e-2),
    (-1.0e+1, 5.6140992743822585858e-2),
];

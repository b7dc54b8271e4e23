// Generated by scripts/gen_filters.py. Do not edit by hand.
//
// Daubechies filters normalized to sum 2, stored as (hi, lo) binary64 pairs.

pub(crate) static FILTERS: [&[(f64, f64)]; 18] = [
    // p = 2
    &[
        (0.6830127018922193, 2.5087710554517257e-17),
        (1.1830127018922194, -8.59345919079984e-17),
        (0.3169872981077807, -2.5087710554517257e-17),
        (-0.18301270189221933, 2.667865061111657e-18),
    ],
    // p = 3
    &[
        (0.4704672077841637, 3.944143135410394e-18),
        (1.1411169158314436, 3.5680950619626935e-17),
        (0.6503650005262326, -5.543697376490336e-17),
        (-0.19093441556832735, -7.888286270820789e-18),
        (-0.1208322083103962, -4.018320601764861e-18),
        (0.049817499736883736, -3.7088733177233253e-20),
    ],
    // p = 4
    &[
        (0.32580342805129836, -1.2204872895019447e-17),
        (1.0109457150918288, 1.804893440835108e-17),
        (0.8922001382467596, 3.448229763822493e-17),
        (-0.03957502623564464, -1.147754077447659e-18),
        (-0.26450716736903973, -5.353963049400262e-18),
        (0.04361630047417725, 2.900294087462243e-18),
        (0.04650360107098177, -3.0456738859907616e-18),
        (-0.014986989330361472, -7.195161826207858e-19),
    ],
    // p = 5
    &[
        (0.22641898258355836, -1.507833727150844e-18),
        (0.8539435427050284, -3.645286971077415e-17),
        (1.0243269442591971, -5.19854301461098e-17),
        (0.19576696134780935, -5.9309513458358046e-18),
        (-0.3426567153829349, 2.0163160770512948e-17),
        (-0.0456011318835473, 3.4199891491839724e-18),
        (0.10970265864213365, 6.725527926710482e-19),
        (-0.008826800108358254, -6.535894265127074e-19),
        (-0.017791870101954193, 1.4325277424941173e-18),
        (0.004717427939067872, -2.8121861352787396e-19),
    ],
    // p = 6
    &[
        (0.15774243200290142, -3.660072268401644e-19),
        (0.6995038140752357, 9.531255709220408e-18),
        (1.062263759881738, 3.457439971834055e-17),
        (0.4458313229300355, -1.0386078095669777e-17),
        (-0.3199865988921228, -1.4366832573507695e-17),
        (-0.18351806406029514, -1.3748778795458333e-17),
        (0.1378880929747446, -1.063282667038068e-17),
        (0.038923209708329326, 2.258048052338706e-18),
        (-0.04466374833018907, -2.5526498961569667e-18),
        (0.0007832511522971558, -1.3244837665974166e-20),
        (0.006756062362927875, 2.8281055245218143e-19),
        (-0.0015235338056025065, -1.1067990997804711e-21),
    ],
    // p = 7
    &[
        (0.1100994307456237, -2.018395857095083e-18),
        (0.5607912836255251, 1.997427705640291e-17),
        (1.0311484916361973, 7.433295663429266e-17),
        (0.6643724822110794, -1.416101487461755e-17),
        (-0.20351382246269248, -6.4203255692151784e-18),
        (-0.31683501128066566, -2.164561511750531e-17),
        (0.10084646500938817, 6.76059571616879e-18),
        (0.11400344515974316, -5.432925825865118e-18),
        (-0.05378245258969088, 3.3577574553374673e-18),
        (-0.023439941564206576, -9.91582115164824e-19),
        (0.01774979237936153, -8.094575803602628e-19),
        (0.0006075149954021387, -1.5188921969849263e-20),
        (-0.002547904718187373, -1.7634046313148328e-19),
        (0.0005002268531224906, 4.590526276690121e-20),
    ],
    // p = 8
    &[
        (0.07695562210815247, -1.2198733162851655e-18),
        (0.44246724715224983, 7.902397283312247e-18),
        (0.9554861504277474, -3.595357732858639e-17),
        (0.8278165324223918, -5.172553802540439e-17),
        (-0.022385735333760436, 8.28626005772225e-19),
        (-0.4016586327809781, -2.5413094373326133e-17),
        (0.0006681940924402375, 2.885091825493119e-20),
        (0.1820763568473155, 5.565128136398386e-19),
        (-0.024563901045696817, -1.557033229036688e-18),
        (-0.06235020665027886, 5.635585483375167e-19),
        (0.01977215929670152, -5.209314450156864e-19),
        (0.012368844819631845, -6.648722034072186e-19),
        (-0.006887719256883618, -1.1783229511144074e-20),
        (-0.0005540045489587787, 4.827919438300456e-20),
        (0.0009552297112992523, 2.496471842106425e-20),
        (-0.00016613726137322538, -5.660973115850976e-21),
    ],
    // p = 9
    &[
        (0.0538503495893256, -6.580386790649021e-19),
        (0.3448343038139559, -2.7332934630382095e-17),
        (0.8553490643594152, -2.3976730149277576e-17),
        (0.9295457143662946, 5.158434346867928e-17),
        (0.18836954950636756, 1.931359721020943e-18),
        (-0.414751761801877, 2.111966372640803e-17),
        (-0.1369535490247662, -3.5649797445517907e-19),
        (0.2100683422790124, -3.4541720985882247e-18),
        (0.043452675461229086, 1.4252651790190286e-18),
        (-0.09564726412019406, 6.57898071142171e-18),
        (0.0003548928132330378, 1.6378313882901178e-20),
        (0.031624165852511724, 2.396162021705356e-18),
        (-0.006679620226277155, -1.3673181081367354e-19),
        (-0.006054960575090132, -2.443226950314147e-19),
        (0.0026129672804944912, 1.5290999679752197e-19),
        (0.0003258146713521844, 1.5404193920049473e-20),
        (-0.00035632975902155536, 2.6462170429397204e-20),
        (5.564551403430971e-05, 2.9980748305327793e-21),
    ],
    // p = 10
    &[
        (0.037717157592241375, 2.6180773492292366e-18),
        (0.2661221827938418, -2.068828693243396e-17),
        (0.7455750714864667, 3.5883317417001926e-17),
        (0.9736281107336399, 2.9226709793865817e-17),
        (0.3976377417690174, -1.5300004737867175e-17),
        (-0.3533362017941126, 2.4908497365612704e-17),
        (-0.2771098787209663, 1.2631373938782254e-17),
        (0.18012744853339333, 7.615841236990264e-18),
        (0.13160298710107002, -3.4249122448047885e-18),
        (-0.10096657119677943, -3.0983525025341664e-18),
        (-0.041659248087601616, 2.3883681598342e-18),
        (0.046969814097397124, -2.0168331107888577e-18),
        (0.005100436967814478, -2.580289118007711e-19),
        (-0.0151790023358565, 5.406422146792748e-19),
        (0.0019733253649632052, -3.407906587920426e-20),
        (0.0028176865901946764, -1.4130957959096668e-19),
        (-0.000969947839856411, -8.641569721102554e-21),
        (-0.00016470900609077795, -1.0012543245384556e-20),
        (0.00013235436685110676, 9.263804576603084e-21),
        (-1.875841562750041e-05, 8.174946547591836e-22),
    ],
    // p = 11
    &[
        (0.0264377294333134, -1.1058390189196497e-18),
        (0.20374153520190472, 6.494910723525569e-18),
        (0.6362543484607789, -9.66615232331195e-19),
        (0.9697075366263586, -4.0097171878377993e-17),
        (0.5826055977806043, -6.562504648883971e-18),
        (-0.229491852355294, -1.0956864431258704e-17),
        (-0.3878209827909993, -6.324272774421196e-18),
        (0.09339973813553303, 3.87957118389747e-18),
        (0.21186617983635966, -5.033848288017771e-18),
        (-0.06573258290450751, -2.9406596354432114e-18),
        (-0.09395863179750423, 6.881234780578934e-18),
        (0.044314509565959476, 2.7838031519960462e-18),
        (0.02947348959828863, 1.3386130166641394e-18),
        (-0.02172913810898397, -7.299362372927718e-19),
        (-0.004724687928191523, 5.571393363938373e-20),
        (0.0069698350902377155, 1.7193153740241584e-19),
        (-0.0004364162061878612, -1.313440969349555e-21),
        (-0.0012629255926067395, 2.782706605700683e-20),
        (0.000352354877907885, 1.2637131168310798e-21),
        (7.698847776288892e-05, -3.4937817441778626e-21),
        (-4.898126436981187e-05, 1.40823312236167e-21),
        (6.355863635892412e-06, 1.4612439107052673e-22),
    ],
    // p = 12
    &[
        (0.01854353303644852, -6.19887243314301e-19),
        (0.15495010900239067, 6.932345325542778e-18),
        (0.5336607500510726, 3.975400869335504e-17),
        (0.9294193466459293, 6.120264531165987e-18),
        (0.729573654437512, -2.4186641962282217e-17),
        (-0.0633056941960865, 6.205848989743409e-18),
        (-0.4471438574273437, -2.325574952754942e-17),
        (-0.033628948114692636, -2.7370822244189103e-18),
        (0.25806371934571865, -7.657176421452973e-18),
        (0.007579576121952363, 1.3363033364722454e-19),
        (-0.13637561208887142, 6.6089370453149e-18),
        (0.01534298714773602, -8.428054164707209e-19),
        (0.05875530909966452, -3.4548360287828155e-18),
        (-0.01727977922831542, 7.168921540999126e-19),
        (-0.018159669147499013, -1.158627768624201e-18),
        (0.009491492922092193, 2.0396418594887043e-19),
        (0.0031800108566658117, -6.085486100371355e-20),
        (-0.0030822835767046167, -1.2501179096255364e-20),
        (9.256209085601843e-06, -3.6531868800782405e-22),
        (0.0005496384324992037, 1.8765444306967068e-20),
        (-0.00012516371156799208, -4.728590263733812e-21),
        (-3.4282722782480895e-05, 2.4362795670436068e-21),
        (1.8069339114439884e-05, -1.108018606826205e-21),
        (-2.16243401810216e-06, -1.5222155505946025e-22),
    ],
    // p = 13
    &[
        (0.013013782053568906, 6.209734796658238e-19),
        (0.11718349488016364, -4.693843075166767e-19),
        (0.4412294302098169, 1.2519036147464168e-17),
        (0.8641634720761928, 8.812053275693133e-18),
        (0.8328156172438957, 6.033775027185808e-18),
        (0.12301639369612952, -1.665315378390083e-18),
        (-0.445438957865535, -1.7744300406037828e-17),
        (-0.17617810218390434, -3.8953331861005495e-18),
        (0.25381750565052325, 1.842554973120432e-17),
        (0.1031653713380694, 6.600188360148179e-18),
        (-0.1496345686437709, 5.577731375318256e-18),
        (-0.03746026368308236, -2.7810177485133965e-18),
        (0.07939320989975462, -4.192203537101284e-18),
        (0.0033657890397620145, 1.3401883647345802e-19),
        (-0.03370271837915876, -3.433765393099937e-18),
        (0.005549291214847238, 7.860201153341034e-20),
        (0.010260952934778052, -7.747549525351795e-19),
        (-0.0039059323261223544, 4.6931089552196465e-20),
        (-0.0018606438898585537, 8.405144789801678e-20),
        (0.001318508258827317, 4.5389279252195613e-20),
        (6.965217480115782e-05, 1.736160919887863e-21),
        (-0.00023352765515756167, -6.861410939308692e-21),
        (4.3386003918454775e-05, -5.678526498176635e-22),
        (1.476711983144363e-05, 1.434582738821394e-22),
        (-6.647392733914135e-06, -4.1943011732989175e-22),
        (7.382244432298444e-07, -1.328672494343061e-23),
    ],
    // p = 14
    &[
        (0.009137450851830226, -3.5116800180307307e-19),
        (0.08819708777894741, 6.393376783806207e-18),
        (0.3604127050867403, 1.3482802815677834e-17),
        (0.7839065225916113, -5.115155758507936e-17),
        (0.8926344166091911, 6.516012275091255e-18),
        (0.3092470523220979, 1.3746730985608117e-17),
        (-0.38422563537411714, -2.252972689302479e-18),
        (-0.308345975168572, 2.2545369765861764e-18),
        (0.19572038841513448, 7.185763583340273e-18),
        (0.19797436583701644, 9.498821293445528e-18),
        (-0.12268078015402867, 3.369995423827623e-18),
        (-0.10118550324745114, -6.008473518081381e-18),
        (0.07811709310229835, 6.488852249659381e-18),
        (0.03815747356097655, 1.7045928792613973e-18),
        (-0.04268853353342003, -1.169133908073278e-18),
        (-0.00794087919922749, 5.681398325885044e-19),
        (0.018087074833128082, -4.26093077285105e-19),
        (-0.001055313015123693, 4.7843850418985744e-20),
        (-0.0054442114973955865, -2.6455471159752213e-19),
        (0.0015014579323156972, 1.0592417601243042e-19),
        (0.0010012931187669365, -6.75495501605175e-20),
        (-0.0005470629862491747, -3.4517085344876095e-20),
        (-5.908194756705495e-05, 2.2753317338965446e-21),
        (9.72343136231871e-05, 6.725789559841373e-22),
        (-1.4619021425907711e-05, 1.1291746112358622e-23),
        (-6.207980206914902e-06, -2.8028549066230444e-22),
        (2.439510864926535e-06, -3.431955082687088e-23),
        (-2.5273975810449474e-07, 1.1437151364513445e-23),
    ],
    // p = 15
    &[
        (0.006418461090081882, -1.3241357681651691e-20),
        (0.06610514300871133, -1.818746563556662e-18),
        (0.29136174262291925, -1.208740668628059e-17),
        (0.6966865328055374, 5.235108957268715e-17),
        (0.9133177018522287, 2.6008205116607486e-17),
        (0.4794219833189473, 2.2034189974361714e-17),
        (-0.27323191454187834, -1.2250619530956875e-17),
        (-0.4085416859985581, -1.1741099737765394e-17),
        (0.0923240373104978, -6.480144862596227e-18),
        (0.2689080617895515, -2.7508087285308533e-17),
        (-0.05609644485268526, 5.831240130736615e-19),
        (-0.15714873480744626, -7.861647452823434e-18),
        (0.047909516391089854, 9.53503458738284e-19),
        (0.07747139759087604, 5.210677076120773e-18),
        (-0.036440051225646725, -1.6398852464070769e-18),
        (-0.029429855183644483, -1.31229132976409e-18),
        (0.02133188144868956, 1.1205016399979458e-19),
        (0.007213903891358393, 2.2189691662855323e-19),
        (-0.009175042204275174, -7.433749826533098e-19),
        (-0.00034189530802681493, 1.2524613582137988e-20),
        (0.00274827512914139, 9.485657308228709e-20),
        (-0.0005281838105284491, -3.333746876009684e-20),
        (-0.0005085020451353994, -4.018344522666351e-20),
        (0.00022047093037207269, -1.0215671771942258e-20),
        (3.647638495566111e-05, 5.963144729363375e-22),
        (-3.978648913370517e-05, 1.4061739338011755e-21),
        (4.755982082500158e-06, 3.6296939086841814e-22),
        (2.5615231760346125e-06, 1.4686212288449594e-22),
        (-8.933420657176751e-07, 4.3235309951619985e-23),
        (8.673880772312465e-08, 1.988903066681526e-24),
    ],
    // p = 16
    &[
        (0.004510239486030843, -3.996941948246979e-20),
        (0.0493669630279844, 1.9350720680368611e-19),
        (0.23343614837333343, -7.643760383084305e-18),
        (0.6085540887105134, -4.1677189754050914e-17),
        (0.9013579688972645, -2.1710188025704093e-17),
        (0.6226644526694199, -7.610645158952263e-18),
        (-0.126927207870761, -1.138093599288826e-17),
        (-0.4625373695032243, 2.7749696455719243e-17),
        (-0.039482308578883435, 6.841896587365462e-19),
        (0.29866874362698037, 2.7182235168370783e-17),
        (0.038664971797948554, 3.25002063729305e-18),
        (-0.18722533722793414, 3.568404882678076e-18),
        (-0.008824300541997942, -8.612588569812037e-19),
        (0.10737308432663176, -2.0839037123749797e-18),
        (-0.010732430476940412, 1.3247804145420896e-19),
        (-0.05216807230985714, 1.7072143417526365e-18),
        (0.014563089924941989, -4.543701208357017e-19),
        (0.019790177710284074, 6.082443568478979e-19),
        (-0.00988537339676541, 4.03662616137952e-20),
        (-0.005153789665802913, 8.230295302332338e-20),
        (0.004423693089122051, 2.0916898079744886e-19),
        (0.0005768534423687025, -2.1770857218648965e-20),
        (-0.001330805720432356, 7.043469638006515e-20),
        (0.00016156190702487893, -1.2882770199338854e-20),
        (0.00024718649272750527, -1.2462624424248289e-20),
        (-8.631789121253947e-05, 2.8367231788620363e-21),
        (-1.9722154219490895e-05, 2.047037357603908e-23),
        (1.6032385720093183e-05, -1.1411296311591222e-21),
        (-1.4758327456009697e-06, 2.4703797501876085e-23),
        (-1.0413783294645763e-06, 4.0006955511042996e-23),
        (3.2651137682251234e-07, -1.758591177034296e-23),
        (-2.983056712539518e-08, -1.9954167180983924e-24),
    ],
    // p = 17
    &[
        (0.003170393865089923, 4.1472897168827384e-20),
        (0.0367488961992441, 3.714055665644232e-20),
        (0.18556589584339958, -1.3628170313470997e-17),
        (0.5237550169313621, 3.3869096620847633e-17),
        (0.8640797004652553, 3.1636662718889375e-17),
        (0.7330091831210946, 3.492961859286649e-17),
        (0.03862920160015755, -2.2487039829322765e-18),
        (-0.46431565514479883, -1.1475425790084652e-17),
        (-0.17903908657677461, 3.3080664588312432e-18),
        (0.27903931176266983, 2.442778073925014e-18),
        (0.14302718043201584, -9.52732271079811e-18),
        (-0.1793444712345787, -9.87526163243699e-18),
        (-0.08073945993825109, 6.099053509699184e-18),
        (0.11470118631596557, -3.368185445414266e-19),
        (0.03155440843130226, 9.706911781940985e-19),
        (-0.06635834874972123, -1.5323983762582106e-19),
        (-0.004625829680675, 2.1382907713087767e-19),
        (0.03215027374762047, -3.381562367997575e-18),
        (-0.00430343770179718, 2.6239154609094675e-19),
        (-0.012166368290071948, 3.39897662922335e-19),
        (0.004197381174234679, -8.025192911758318e-20),
        (0.0032543956632576066, -2.951604809790085e-21),
        (-0.0020320061170844726, 1.4445779457736827e-19),
        (-0.0004640494592050457, -1.9234048219532474e-20),
        (0.0006214979681445097, -3.703978663320013e-20),
        (-3.6218164282873774e-05, -2.6994325910830933e-21),
        (-0.0001160334396551179, 1.3399562720852957e-21),
        (3.279110654240615e-05, -7.622450762729731e-22),
        (9.88620272223426e-06, 3.9703308864894152e-22),
        (-6.372364962561771e-06, -2.4371336327343627e-23),
        (4.2660453700255737e-07, -9.85842411600917e-24),
        (4.18282077334026e-07, 1.6095779469212753e-23),
        (-1.1913262141068749e-07, 5.163062937209339e-25),
        (1.0277787120590932e-08, -4.937474608819399e-25),
    ],
    // p = 18
    &[
        (0.0022292392894262196, -1.490422570528988e-19),
        (0.027278103162551505, 2.756929940000716e-20),
        (0.1464962132714933, -9.111636138047687e-18),
        (0.4450232266320378, -8.345071887039801e-18),
        (0.8086852268720486, 3.768641161176701e-17),
        (0.8086496553309107, -2.589148921642995e-17),
        (0.20820492164264512, 9.319446768395706e-18),
        (-0.4152895270553027, -1.547396303645014e-17),
        (-0.30615027286526814, 3.841610552310017e-18),
        (0.21147297628012426, 9.194558245830435e-18),
        (0.23628865852889952, 7.261848525041329e-18),
        (-0.13057700280558823, -4.98040475820928e-20),
        (-0.15097047504012737, -1.3079852349271196e-17),
        (0.09176438119151205, -6.111929611958342e-18),
        (0.08068264830214623, -4.666841026943627e-18),
        (-0.06296947375934657, -5.181905657585623e-18),
        (-0.033563828020479344, -1.0773958054228828e-18),
        (0.037718074039279195, -3.294351484241011e-18),
        (0.008856042850837312, -1.1914331048269907e-19),
        (-0.018457581363752733, -3.021155123289965e-19),
        (0.00016776820278692917, 9.275727026525297e-21),
        (0.0069909435703213755, -9.81405123200146e-20),
        (-0.0015821269103306126, -8.580452500970402e-20),
        (-0.0018958894667740899, -1.0541681537630276e-20),
        (0.0008887846923353789, -3.2569351919055053e-20),
        (0.00030204994152643265, 7.363384069356303e-21),
        (-0.0002809314768250552, -5.779994746791398e-21),
        (-2.17211482678388e-07, -9.448798944710678e-24),
        (5.290909351006538e-05, 1.774394233829542e-21),
        (-1.2049951668047724e-05, -3.807575712608389e-23),
        (-4.713056878472521e-06, -3.6375110839416283e-22),
        (2.5013378893915556e-06, 2.0562524854940633e-22),
        (-1.0877611266827866e-07, 3.4705921573454003e-25),
        (-1.6632548270216004e-07, 2.203714563992115e-24),
        (4.339989298215428e-08, 2.6666730610587057e-24),
        (-3.5467549197310836e-09, -5.164847191968832e-26),
    ],
    // p = 19
    &[
        (0.0015678958152845425, 6.91559182778946e-20),
        (0.020196523114656407, 3.1277008745776394e-19),
        (0.11494461010410946, 4.550579613951483e-18),
        (0.3739017059025295, -6.4335642513234724e-18),
        (0.7416650376123308, -5.13842856130966e-17),
        (0.8509387339177523, 2.5449009014170115e-17),
        (0.36896118039378556, 2.1440982297866924e-17),
        (-0.32256994316012366, -1.653891115683426e-17),
        (-0.4042368696792583, -7.085959343457446e-18),
        (0.10557425228313382, -2.5741939808706076e-18),
        (0.3003078869501844, -3.0237294811519187e-18),
        (-0.04740237654920761, 8.645350749462663e-19),
        (-0.20192946643665002, 8.059543784346854e-18),
        (0.039010162764018835, -2.547699834279085e-18),
        (0.12290471236887299, 3.109730265432465e-19),
        (-0.03747840772457751, -1.2306924473250377e-18),
        (-0.06459311025215755, 4.313432379579611e-18),
        (0.030580625140236503, -1.3336166154861626e-19),
        (0.0274011654317094, -5.72912144964872e-19),
        (-0.019782568984930655, 6.237844373678155e-19),
        (-0.008297081059196312, 9.573553488881583e-20),
        (0.009957120415802895, 8.409826539567919e-20),
        (0.0010874656837079383, -7.108738491959478e-20),
        (-0.0038007722061324106, -3.067856636495536e-20),
        (0.0004833904334576315, -1.8460861568599133e-20),
        (0.0010405819037270939, -2.673478598556681e-20),
        (-0.0003686517264637248, 1.8014351182981627e-20),
        (-0.00017621212955287277, -7.845157022771916e-21),
        (0.00012319596840242624, -1.0592776371568901e-20),
        (7.2209044276254e-06, 3.6483600099694987e-22),
        (-2.3532762999715832e-05, 1.7447495002569221e-22),
        (4.258146571927981e-06, 1.2162393298950945e-22),
        (2.1664782709629283e-06, -1.493421660729505e-22),
        (-9.705402126469812e-07, -7.869035638945754e-23),
        (2.0464918981113216e-08, -3.568127952227663e-25),
        (6.557620290391892e-08, 4.2849336193710985e-24),
        (-1.578830944263422e-08, -5.451731978768366e-25),
        (1.2256775171147946e-09, 7.563796375139703e-27),
    ],
];

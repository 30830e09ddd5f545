#pragma once

// Curated HS/KSIC classification subset used as the default code universe.
// Same CSV schema as data/classification_tables.csv; an external table can
// be loaded over this one at runtime.

namespace dwellsim::data {

inline constexpr const char* kClassificationCsv = R"csv(kind,level,code,parent_code,description
HS,1,02,,Meat and edible meat offal
HS,2,0201,02,"Bovine meat, fresh or chilled"
HS,3,020110,0201,"Bovine meat, fresh or chilled"
HS,3,020120,0201,"Bovine meat, fresh or chilled"
HS,3,020130,0201,"Bovine meat, fresh or chilled"
HS,2,0202,02,"Bovine meat, frozen"
HS,3,020210,0202,"Bovine meat, frozen"
HS,3,020220,0202,"Bovine meat, frozen"
HS,3,020230,0202,"Bovine meat, frozen"
HS,2,0203,02,"Swine meat, fresh, chilled or frozen"
HS,3,020311,0203,"Swine meat, fresh, chilled or frozen"
HS,3,020312,0203,"Swine meat, fresh, chilled or frozen"
HS,3,020319,0203,"Swine meat, fresh, chilled or frozen"
HS,2,0207,02,Poultry meat and edible offal
HS,3,020711,0207,Poultry meat and edible offal
HS,3,020714,0207,Poultry meat and edible offal
HS,1,03,,Fish and crustaceans
HS,2,0302,03,"Fish, fresh or chilled"
HS,3,030211,0302,"Fish, fresh or chilled"
HS,3,030213,0302,"Fish, fresh or chilled"
HS,3,030214,0302,"Fish, fresh or chilled"
HS,2,0303,03,"Fish, frozen"
HS,3,030311,0303,"Fish, frozen"
HS,3,030312,0303,"Fish, frozen"
HS,2,0306,03,Crustaceans
HS,3,030616,0306,Crustaceans
HS,3,030617,0306,Crustaceans
HS,1,04,,Dairy produce; eggs; honey
HS,2,0401,04,"Milk and cream, not concentrated"
HS,3,040110,0401,"Milk and cream, not concentrated"
HS,3,040120,0401,"Milk and cream, not concentrated"
HS,3,040150,0401,"Milk and cream, not concentrated"
HS,2,0402,04,"Milk and cream, concentrated or sweetened"
HS,3,040210,0402,"Milk and cream, concentrated or sweetened"
HS,3,040221,0402,"Milk and cream, concentrated or sweetened"
HS,3,040229,0402,"Milk and cream, concentrated or sweetened"
HS,2,0405,04,Butter and other fats of milk
HS,3,040510,0405,Butter and other fats of milk
HS,2,0406,04,Cheese and curd
HS,3,040610,0406,Cheese and curd
HS,3,040620,0406,Cheese and curd
HS,3,040630,0406,Cheese and curd
HS,3,040690,0406,Cheese and curd
HS,2,0409,04,Natural honey
HS,3,040900,0409,Natural honey
HS,1,07,,Edible vegetables
HS,2,0701,07,"Potatoes, fresh or chilled"
HS,3,070110,0701,"Potatoes, fresh or chilled"
HS,3,070190,0701,"Potatoes, fresh or chilled"
HS,2,0703,07,"Onions, shallots, garlic, leeks"
HS,3,070310,0703,"Onions, shallots, garlic, leeks"
HS,3,070320,0703,"Onions, shallots, garlic, leeks"
HS,2,0710,07,"Vegetables, frozen"
HS,3,071010,0710,"Vegetables, frozen"
HS,3,071021,0710,"Vegetables, frozen"
HS,3,071080,0710,"Vegetables, frozen"
HS,1,08,,Edible fruit and nuts
HS,2,0803,08,Bananas and plantains
HS,3,080310,0803,Bananas and plantains
HS,3,080390,0803,Bananas and plantains
HS,2,0805,08,Citrus fruit
HS,3,080510,0805,Citrus fruit
HS,3,080550,0805,Citrus fruit
HS,2,0808,08,"Apples, pears and quinces"
HS,3,080810,0808,"Apples, pears and quinces"
HS,3,080830,0808,"Apples, pears and quinces"
HS,2,0810,08,"Other fruit, fresh"
HS,3,081010,0810,"Other fruit, fresh"
HS,3,081050,0810,"Other fruit, fresh"
HS,1,09,,"Coffee, tea, mate and spices"
HS,2,0901,09,Coffee
HS,3,090111,0901,Coffee
HS,3,090112,0901,Coffee
HS,3,090121,0901,Coffee
HS,2,0902,09,Tea
HS,3,090210,0902,Tea
HS,3,090230,0902,Tea
HS,2,0904,09,Pepper and capsicum
HS,3,090411,0904,Pepper and capsicum
HS,3,090422,0904,Pepper and capsicum
HS,1,10,,Cereals
HS,2,1001,10,Wheat and meslin
HS,3,100119,1001,Wheat and meslin
HS,3,100199,1001,Wheat and meslin
HS,2,1005,10,Maize (corn)
HS,3,100510,1005,Maize (corn)
HS,3,100590,1005,Maize (corn)
HS,2,1006,10,Rice
HS,3,100610,1006,Rice
HS,3,100630,1006,Rice
HS,1,11,,Products of the milling industry
HS,2,1101,11,Wheat or meslin flour
HS,3,110100,1101,Wheat or meslin flour
HS,2,1102,11,Cereal flours other than wheat
HS,3,110220,1102,Cereal flours other than wheat
HS,3,110290,1102,Cereal flours other than wheat
HS,2,1103,11,"Cereal groats, meal and pellets"
HS,3,110311,1103,"Cereal groats, meal and pellets"
HS,3,110313,1103,"Cereal groats, meal and pellets"
HS,3,110319,1103,"Cereal groats, meal and pellets"
HS,2,1108,11,Starches; inulin
HS,3,110812,1108,Starches; inulin
HS,3,110814,1108,Starches; inulin
HS,1,15,,Animal or vegetable fats and oils
HS,2,1507,15,Soya-bean oil
HS,3,150710,1507,Soya-bean oil
HS,3,150790,1507,Soya-bean oil
HS,2,1509,15,Olive oil
HS,3,150910,1509,Olive oil
HS,3,150990,1509,Olive oil
HS,2,1511,15,Palm oil
HS,3,151110,1511,Palm oil
HS,3,151190,1511,Palm oil
HS,1,16,,Preparations of meat or fish
HS,2,1601,16,Sausages and similar products
HS,3,160100,1601,Sausages and similar products
HS,2,1602,16,Other prepared or preserved meat
HS,3,160232,1602,Other prepared or preserved meat
HS,3,160241,1602,Other prepared or preserved meat
HS,3,160250,1602,Other prepared or preserved meat
HS,2,1604,16,Prepared or preserved fish
HS,3,160413,1604,Prepared or preserved fish
HS,3,160414,1604,Prepared or preserved fish
HS,3,160420,1604,Prepared or preserved fish
HS,1,17,,Sugars and sugar confectionery
HS,2,1701,17,Cane or beet sugar
HS,3,170112,1701,Cane or beet sugar
HS,3,170114,1701,Cane or beet sugar
HS,3,170199,1701,Cane or beet sugar
HS,2,1704,17,Sugar confectionery
HS,3,170410,1704,Sugar confectionery
HS,3,170490,1704,Sugar confectionery
HS,1,18,,Cocoa and cocoa preparations
HS,2,1801,18,Cocoa beans
HS,3,180100,1801,Cocoa beans
HS,2,1806,18,Chocolate and cocoa food preparations
HS,3,180610,1806,Chocolate and cocoa food preparations
HS,3,180620,1806,Chocolate and cocoa food preparations
HS,3,180631,1806,Chocolate and cocoa food preparations
HS,3,180690,1806,Chocolate and cocoa food preparations
HS,1,19,,Preparations of cereals or milk
HS,2,1901,19,Malt extract; food preparations of flour
HS,3,190110,1901,Malt extract; food preparations of flour
HS,3,190120,1901,Malt extract; food preparations of flour
HS,3,190190,1901,Malt extract; food preparations of flour
HS,2,1902,19,Pasta
HS,3,190211,1902,Pasta
HS,3,190219,1902,Pasta
HS,3,190230,1902,Pasta
HS,2,1905,19,"Bread, pastry, biscuits"
HS,3,190510,1905,"Bread, pastry, biscuits"
HS,3,190531,1905,"Bread, pastry, biscuits"
HS,3,190590,1905,"Bread, pastry, biscuits"
HS,1,20,,"Preparations of vegetables, fruit or nuts"
HS,2,2005,20,"Other vegetables prepared, not frozen"
HS,3,200510,2005,"Other vegetables prepared, not frozen"
HS,3,200520,2005,"Other vegetables prepared, not frozen"
HS,3,200599,2005,"Other vegetables prepared, not frozen"
HS,2,2007,20,"Jams, jellies, marmalades"
HS,3,200710,2007,"Jams, jellies, marmalades"
HS,3,200791,2007,"Jams, jellies, marmalades"
HS,3,200799,2007,"Jams, jellies, marmalades"
HS,2,2008,20,Fruit and nuts otherwise prepared
HS,3,200811,2008,Fruit and nuts otherwise prepared
HS,3,200819,2008,Fruit and nuts otherwise prepared
HS,3,200870,2008,Fruit and nuts otherwise prepared
HS,2,2009,20,"Fruit or vegetable juices, unfermented"
HS,3,200911,2009,"Fruit or vegetable juices, unfermented"
HS,3,200950,2009,"Fruit or vegetable juices, unfermented"
HS,3,200971,2009,"Fruit or vegetable juices, unfermented"
HS,3,200979,2009,"Fruit or vegetable juices, unfermented"
HS,3,200989,2009,"Fruit or vegetable juices, unfermented"
HS,3,200990,2009,"Fruit or vegetable juices, unfermented"
HS,1,21,,Miscellaneous edible preparations
HS,2,2101,21,Extracts of coffee or tea
HS,3,210111,2101,Extracts of coffee or tea
HS,3,210112,2101,Extracts of coffee or tea
HS,2,2103,21,Sauces and condiments
HS,3,210310,2103,Sauces and condiments
HS,3,210320,2103,Sauces and condiments
HS,3,210390,2103,Sauces and condiments
HS,2,2106,21,Food preparations nes
HS,3,210610,2106,Food preparations nes
HS,3,210690,2106,Food preparations nes
HS,1,22,,"Beverages, spirits and vinegar"
HS,2,2201,22,"Waters, natural or mineral"
HS,3,220110,2201,"Waters, natural or mineral"
HS,3,220190,2201,"Waters, natural or mineral"
HS,2,2202,22,"Waters, sweetened or flavoured"
HS,3,220210,2202,"Waters, sweetened or flavoured"
HS,3,220291,2202,"Waters, sweetened or flavoured"
HS,3,220299,2202,"Waters, sweetened or flavoured"
HS,2,2203,22,Beer made from malt
HS,3,220300,2203,Beer made from malt
HS,2,2204,22,Wine of fresh grapes
HS,3,220410,2204,Wine of fresh grapes
HS,3,220421,2204,Wine of fresh grapes
HS,1,23,,Food industry residues; animal feed
HS,2,2301,23,Flours and meals of meat or fish
HS,3,230110,2301,Flours and meals of meat or fish
HS,3,230120,2301,Flours and meals of meat or fish
HS,2,2304,23,Soya-bean oil-cake
HS,3,230400,2304,Soya-bean oil-cake
HS,2,2309,23,Animal feed preparations
HS,3,230910,2309,Animal feed preparations
HS,3,230990,2309,Animal feed preparations
HS,1,28,,Inorganic chemicals
HS,2,2804,28,"Hydrogen, rare gases, non-metals"
HS,3,280430,2804,"Hydrogen, rare gases, non-metals"
HS,3,280440,2804,"Hydrogen, rare gases, non-metals"
HS,2,2811,28,Other inorganic acids
HS,3,281121,2811,Other inorganic acids
HS,3,281122,2811,Other inorganic acids
HS,2,2815,28,Sodium or potassium hydroxide
HS,3,281511,2815,Sodium or potassium hydroxide
HS,3,281512,2815,Sodium or potassium hydroxide
HS,1,29,,Organic chemicals
HS,2,2905,29,Acyclic alcohols
HS,3,290511,2905,Acyclic alcohols
HS,3,290512,2905,Acyclic alcohols
HS,2,2915,29,Saturated acyclic monocarboxylic acids
HS,3,291521,2915,Saturated acyclic monocarboxylic acids
HS,3,291529,2915,Saturated acyclic monocarboxylic acids
HS,2,2916,29,Unsaturated acyclic monocarboxylic acids
HS,3,291611,2916,Unsaturated acyclic monocarboxylic acids
HS,3,291612,2916,Unsaturated acyclic monocarboxylic acids
HS,3,291615,2916,Unsaturated acyclic monocarboxylic acids
HS,2,2933,29,Heterocyclic compounds
HS,3,293321,2933,Heterocyclic compounds
HS,3,293329,2933,Heterocyclic compounds
HS,1,30,,Pharmaceutical products
HS,2,3002,30,"Blood, sera, vaccines, cultures"
HS,3,300212,3002,"Blood, sera, vaccines, cultures"
HS,3,300215,3002,"Blood, sera, vaccines, cultures"
HS,2,3003,30,"Medicaments, not dosed"
HS,3,300310,3003,"Medicaments, not dosed"
HS,3,300320,3003,"Medicaments, not dosed"
HS,2,3004,30,"Medicaments, in measured doses"
HS,3,300410,3004,"Medicaments, in measured doses"
HS,3,300420,3004,"Medicaments, in measured doses"
HS,3,300490,3004,"Medicaments, in measured doses"
HS,1,32,,Tanning or dyeing extracts; paints
HS,2,3204,32,Synthetic organic colouring matter
HS,3,320411,3204,Synthetic organic colouring matter
HS,3,320417,3204,Synthetic organic colouring matter
HS,2,3208,32,"Paints and varnishes, non-aqueous"
HS,3,320810,3208,"Paints and varnishes, non-aqueous"
HS,3,320820,3208,"Paints and varnishes, non-aqueous"
HS,3,320890,3208,"Paints and varnishes, non-aqueous"
HS,2,3214,32,"Glaziers putty, mastics, fillers"
HS,3,321410,3214,"Glaziers putty, mastics, fillers"
HS,1,33,,Essential oils; perfumery; cosmetics
HS,2,3302,33,Mixtures of odoriferous substances
HS,3,330210,3302,Mixtures of odoriferous substances
HS,3,330290,3302,Mixtures of odoriferous substances
HS,2,3303,33,Perfumes and toilet waters
HS,3,330300,3303,Perfumes and toilet waters
HS,2,3304,33,Beauty or make-up preparations
HS,3,330410,3304,Beauty or make-up preparations
HS,3,330420,3304,Beauty or make-up preparations
HS,3,330430,3304,Beauty or make-up preparations
HS,3,330491,3304,Beauty or make-up preparations
HS,3,330499,3304,Beauty or make-up preparations
HS,2,3305,33,Preparations for use on the hair
HS,3,330510,3305,Preparations for use on the hair
HS,3,330590,3305,Preparations for use on the hair
HS,2,3306,33,Oral or dental hygiene preparations
HS,3,330610,3306,Oral or dental hygiene preparations
HS,3,330620,3306,Oral or dental hygiene preparations
HS,3,330690,3306,Oral or dental hygiene preparations
HS,2,3307,33,"Shaving, deodorant, bath preparations"
HS,3,330710,3307,"Shaving, deodorant, bath preparations"
HS,3,330749,3307,"Shaving, deodorant, bath preparations"
HS,1,34,,Soap and washing preparations
HS,2,3401,34,Soap and organic surface-active products
HS,3,340111,3401,Soap and organic surface-active products
HS,3,340119,3401,Soap and organic surface-active products
HS,3,340120,3401,Soap and organic surface-active products
HS,2,3402,34,Washing and cleaning preparations
HS,3,340220,3402,Washing and cleaning preparations
HS,3,340290,3402,Washing and cleaning preparations
HS,1,38,,Miscellaneous chemical products
HS,2,3808,38,"Insecticides, fungicides, herbicides"
HS,3,380891,3808,"Insecticides, fungicides, herbicides"
HS,3,380892,3808,"Insecticides, fungicides, herbicides"
HS,2,3824,38,Chemical products and preparations nes
HS,3,382430,3824,Chemical products and preparations nes
HS,3,382499,3824,Chemical products and preparations nes
HS,1,39,,Plastics and articles thereof
HS,2,3901,39,"Polymers of ethylene, primary forms"
HS,3,390110,3901,"Polymers of ethylene, primary forms"
HS,3,390120,3901,"Polymers of ethylene, primary forms"
HS,3,390190,3901,"Polymers of ethylene, primary forms"
HS,2,3902,39,"Polymers of propylene, primary forms"
HS,3,390210,3902,"Polymers of propylene, primary forms"
HS,3,390230,3902,"Polymers of propylene, primary forms"
HS,2,3907,39,"Polyethers, epoxides, polyesters"
HS,3,390740,3907,"Polyethers, epoxides, polyesters"
HS,3,390761,3907,"Polyethers, epoxides, polyesters"
HS,3,390769,3907,"Polyethers, epoxides, polyesters"
HS,2,3920,39,"Plates, sheets, film of plastics"
HS,3,392010,3920,"Plates, sheets, film of plastics"
HS,3,392020,3920,"Plates, sheets, film of plastics"
HS,3,392043,3920,"Plates, sheets, film of plastics"
HS,2,3923,39,"Articles for packing of goods, plastic"
HS,3,392310,3923,"Articles for packing of goods, plastic"
HS,3,392321,3923,"Articles for packing of goods, plastic"
HS,3,392330,3923,"Articles for packing of goods, plastic"
HS,2,3926,39,Other articles of plastics
HS,3,392620,3926,Other articles of plastics
HS,3,392690,3926,Other articles of plastics
HS,1,40,,Rubber and articles thereof
HS,2,4011,40,New pneumatic tyres of rubber
HS,3,401110,4011,New pneumatic tyres of rubber
HS,3,401120,4011,New pneumatic tyres of rubber
HS,3,401180,4011,New pneumatic tyres of rubber
HS,2,4016,40,Other articles of vulcanised rubber
HS,3,401691,4016,Other articles of vulcanised rubber
HS,3,401699,4016,Other articles of vulcanised rubber
HS,1,44,,Wood and articles of wood
HS,2,4407,44,Wood sawn or chipped lengthwise
HS,3,440711,4407,Wood sawn or chipped lengthwise
HS,3,440712,4407,Wood sawn or chipped lengthwise
HS,2,4412,44,"Plywood, veneered panels"
HS,3,441231,4412,"Plywood, veneered panels"
HS,3,441233,4412,"Plywood, veneered panels"
HS,2,4418,44,Builders joinery of wood
HS,3,441811,4418,Builders joinery of wood
HS,3,441819,4418,Builders joinery of wood
HS,1,48,,Paper and paperboard
HS,2,4802,48,Uncoated paper for writing or printing
HS,3,480255,4802,Uncoated paper for writing or printing
HS,3,480256,4802,Uncoated paper for writing or printing
HS,2,4810,48,Paper coated with kaolin
HS,3,481013,4810,Paper coated with kaolin
HS,3,481019,4810,Paper coated with kaolin
HS,2,4819,48,"Cartons, boxes, cases of paper"
HS,3,481910,4819,"Cartons, boxes, cases of paper"
HS,3,481920,4819,"Cartons, boxes, cases of paper"
HS,1,52,,Cotton
HS,2,5201,52,"Cotton, not carded or combed"
HS,3,520100,5201,"Cotton, not carded or combed"
HS,2,5205,52,Cotton yarn
HS,3,520511,5205,Cotton yarn
HS,3,520512,5205,Cotton yarn
HS,2,5208,52,"Woven fabrics of cotton, light"
HS,3,520811,5208,"Woven fabrics of cotton, light"
HS,3,520812,5208,"Woven fabrics of cotton, light"
HS,3,520819,5208,"Woven fabrics of cotton, light"
HS,2,5209,52,"Woven fabrics of cotton, heavy"
HS,3,520911,5209,"Woven fabrics of cotton, heavy"
HS,3,520942,5209,"Woven fabrics of cotton, heavy"
HS,1,61,,Knitted or crocheted apparel
HS,2,6104,61,"Womens suits, ensembles, knitted"
HS,3,610442,6104,"Womens suits, ensembles, knitted"
HS,3,610443,6104,"Womens suits, ensembles, knitted"
HS,2,6109,61,"T-shirts, singlets, knitted"
HS,3,610910,6109,"T-shirts, singlets, knitted"
HS,3,610990,6109,"T-shirts, singlets, knitted"
HS,2,6110,61,"Jerseys, pullovers, knitted"
HS,3,611011,6110,"Jerseys, pullovers, knitted"
HS,3,611020,6110,"Jerseys, pullovers, knitted"
HS,3,611030,6110,"Jerseys, pullovers, knitted"
HS,1,62,,"Apparel, not knitted or crocheted"
HS,2,6203,62,"Mens suits, jackets, trousers"
HS,3,620311,6203,"Mens suits, jackets, trousers"
HS,3,620342,6203,"Mens suits, jackets, trousers"
HS,3,620343,6203,"Mens suits, jackets, trousers"
HS,2,6204,62,"Womens suits, dresses, skirts"
HS,3,620442,6204,"Womens suits, dresses, skirts"
HS,3,620443,6204,"Womens suits, dresses, skirts"
HS,3,620462,6204,"Womens suits, dresses, skirts"
HS,2,6205,62,Mens shirts
HS,3,620520,6205,Mens shirts
HS,3,620530,6205,Mens shirts
HS,2,6211,62,"Track suits, other garments"
HS,3,621132,6211,"Track suits, other garments"
HS,3,621142,6211,"Track suits, other garments"
HS,1,64,,Footwear
HS,2,6402,64,Footwear with rubber or plastic uppers
HS,3,640219,6402,Footwear with rubber or plastic uppers
HS,3,640291,6402,Footwear with rubber or plastic uppers
HS,3,640299,6402,Footwear with rubber or plastic uppers
HS,2,6403,64,Footwear with leather uppers
HS,3,640319,6403,Footwear with leather uppers
HS,3,640391,6403,Footwear with leather uppers
HS,3,640399,6403,Footwear with leather uppers
HS,2,6404,64,Footwear with textile uppers
HS,3,640411,6404,Footwear with textile uppers
HS,3,640419,6404,Footwear with textile uppers
HS,1,68,,"Articles of stone, plaster, cement"
HS,2,6802,68,Worked monumental or building stone
HS,3,680221,6802,Worked monumental or building stone
HS,3,680223,6802,Worked monumental or building stone
HS,3,680291,6802,Worked monumental or building stone
HS,3,680293,6802,Worked monumental or building stone
HS,2,6810,68,Articles of cement or concrete
HS,3,681011,6810,Articles of cement or concrete
HS,3,681019,6810,Articles of cement or concrete
HS,2,6815,68,Articles of stone or minerals nes
HS,3,681510,6815,Articles of stone or minerals nes
HS,3,681599,6815,Articles of stone or minerals nes
HS,1,69,,Ceramic products
HS,2,6907,69,Ceramic flags and paving tiles
HS,3,690721,6907,Ceramic flags and paving tiles
HS,3,690722,6907,Ceramic flags and paving tiles
HS,2,6910,69,"Ceramic sinks, baths, sanitary ware"
HS,3,691010,6910,"Ceramic sinks, baths, sanitary ware"
HS,3,691090,6910,"Ceramic sinks, baths, sanitary ware"
HS,2,6911,69,Tableware of porcelain or china
HS,3,691110,6911,Tableware of porcelain or china
HS,1,70,,Glass and glassware
HS,2,7005,70,Float glass
HS,3,700521,7005,Float glass
HS,3,700529,7005,Float glass
HS,2,7010,70,"Carboys, bottles, flasks of glass"
HS,3,701010,7010,"Carboys, bottles, flasks of glass"
HS,3,701090,7010,"Carboys, bottles, flasks of glass"
HS,2,7013,70,Glassware for table or kitchen
HS,3,701337,7013,Glassware for table or kitchen
HS,3,701342,7013,Glassware for table or kitchen
HS,1,72,,Iron and steel
HS,2,7208,72,"Flat-rolled iron, hot-rolled"
HS,3,720810,7208,"Flat-rolled iron, hot-rolled"
HS,3,720825,7208,"Flat-rolled iron, hot-rolled"
HS,3,720838,7208,"Flat-rolled iron, hot-rolled"
HS,2,7210,72,"Flat-rolled iron, coated"
HS,3,721049,7210,"Flat-rolled iron, coated"
HS,3,721061,7210,"Flat-rolled iron, coated"
HS,2,7214,72,Bars and rods of iron or steel
HS,3,721420,7214,Bars and rods of iron or steel
HS,3,721430,7214,Bars and rods of iron or steel
HS,2,7219,72,Flat-rolled stainless steel
HS,3,721931,7219,Flat-rolled stainless steel
HS,3,721933,7219,Flat-rolled stainless steel
HS,1,73,,Articles of iron or steel
HS,2,7304,73,"Tubes and pipes, seamless"
HS,3,730419,7304,"Tubes and pipes, seamless"
HS,3,730423,7304,"Tubes and pipes, seamless"
HS,3,730429,7304,"Tubes and pipes, seamless"
HS,2,7306,73,Other tubes and hollow profiles
HS,3,730630,7306,Other tubes and hollow profiles
HS,3,730640,7306,Other tubes and hollow profiles
HS,2,7308,73,Structures of iron or steel
HS,3,730820,7308,Structures of iron or steel
HS,3,730890,7308,Structures of iron or steel
HS,2,7318,73,"Screws, bolts, nuts of iron or steel"
HS,3,731815,7318,"Screws, bolts, nuts of iron or steel"
HS,3,731816,7318,"Screws, bolts, nuts of iron or steel"
HS,2,7326,73,Other articles of iron or steel
HS,3,732619,7326,Other articles of iron or steel
HS,3,732690,7326,Other articles of iron or steel
HS,1,76,,Aluminium and articles thereof
HS,2,7601,76,Unwrought aluminium
HS,3,760110,7601,Unwrought aluminium
HS,3,760120,7601,Unwrought aluminium
HS,2,7604,76,"Aluminium bars, rods, profiles"
HS,3,760421,7604,"Aluminium bars, rods, profiles"
HS,3,760429,7604,"Aluminium bars, rods, profiles"
HS,2,7606,76,"Aluminium plates, sheets"
HS,3,760611,7606,"Aluminium plates, sheets"
HS,3,760612,7606,"Aluminium plates, sheets"
HS,2,7610,76,Aluminium structures
HS,3,761010,7610,Aluminium structures
HS,3,761090,7610,Aluminium structures
HS,1,84,,Machinery and mechanical appliances
HS,2,8407,84,Spark-ignition engines
HS,3,840731,8407,Spark-ignition engines
HS,3,840734,8407,Spark-ignition engines
HS,2,8408,84,Compression-ignition engines
HS,3,840820,8408,Compression-ignition engines
HS,3,840890,8408,Compression-ignition engines
HS,2,8413,84,Pumps for liquids
HS,3,841330,8413,Pumps for liquids
HS,3,841350,8413,Pumps for liquids
HS,3,841370,8413,Pumps for liquids
HS,2,8418,84,"Refrigerators, freezers"
HS,3,841810,8418,"Refrigerators, freezers"
HS,3,841821,8418,"Refrigerators, freezers"
HS,3,841850,8418,"Refrigerators, freezers"
HS,2,8421,84,Centrifuges; filtering machinery
HS,3,842121,8421,Centrifuges; filtering machinery
HS,3,842123,8421,Centrifuges; filtering machinery
HS,3,842131,8421,Centrifuges; filtering machinery
HS,2,8450,84,Household washing machines
HS,3,845011,8450,Household washing machines
HS,3,845020,8450,Household washing machines
HS,2,8471,84,Automatic data-processing machines
HS,3,847130,8471,Automatic data-processing machines
HS,3,847150,8471,Automatic data-processing machines
HS,3,847170,8471,Automatic data-processing machines
HS,2,8473,84,Parts for office machines
HS,3,847330,8473,Parts for office machines
HS,2,8481,84,"Taps, cocks, valves"
HS,3,848110,8481,"Taps, cocks, valves"
HS,3,848180,8481,"Taps, cocks, valves"
HS,2,8483,84,"Transmission shafts, gears, bearings"
HS,3,848310,8483,"Transmission shafts, gears, bearings"
HS,3,848320,8483,"Transmission shafts, gears, bearings"
HS,3,848330,8483,"Transmission shafts, gears, bearings"
HS,3,848340,8483,"Transmission shafts, gears, bearings"
HS,3,848350,8483,"Transmission shafts, gears, bearings"
HS,1,85,,Electrical machinery and equipment
HS,2,8501,85,Electric motors and generators
HS,3,850110,8501,Electric motors and generators
HS,3,850131,8501,Electric motors and generators
HS,3,850152,8501,Electric motors and generators
HS,2,8504,85,"Electrical transformers, converters"
HS,3,850421,8504,"Electrical transformers, converters"
HS,3,850431,8504,"Electrical transformers, converters"
HS,3,850440,8504,"Electrical transformers, converters"
HS,2,8507,85,Electric accumulators
HS,3,850710,8507,Electric accumulators
HS,3,850760,8507,Electric accumulators
HS,3,850780,8507,Electric accumulators
HS,2,8517,85,"Telephone sets, communication apparatus"
HS,3,851712,8517,"Telephone sets, communication apparatus"
HS,3,851762,8517,"Telephone sets, communication apparatus"
HS,2,8528,85,Monitors and projectors
HS,3,852852,8528,Monitors and projectors
HS,3,852872,8528,Monitors and projectors
HS,2,8536,85,Electrical switching apparatus
HS,3,853641,8536,Electrical switching apparatus
HS,3,853650,8536,Electrical switching apparatus
HS,3,853690,8536,Electrical switching apparatus
HS,2,8544,85,Insulated wire and cables
HS,3,854411,8544,Insulated wire and cables
HS,3,854442,8544,Insulated wire and cables
HS,3,854449,8544,Insulated wire and cables
HS,1,87,,Vehicles other than railway
HS,2,8703,87,Motor cars for transport of persons
HS,3,870321,8703,Motor cars for transport of persons
HS,3,870322,8703,Motor cars for transport of persons
HS,3,870323,8703,Motor cars for transport of persons
HS,3,870380,8703,Motor cars for transport of persons
HS,2,8704,87,Motor vehicles for transport of goods
HS,3,870421,8704,Motor vehicles for transport of goods
HS,3,870431,8704,Motor vehicles for transport of goods
HS,2,8707,87,Bodies for motor vehicles
HS,3,870710,8707,Bodies for motor vehicles
HS,3,870790,8707,Bodies for motor vehicles
HS,2,8708,87,Parts and accessories of motor vehicles
HS,3,870810,8708,Parts and accessories of motor vehicles
HS,3,870829,8708,Parts and accessories of motor vehicles
HS,3,870830,8708,Parts and accessories of motor vehicles
HS,3,870840,8708,Parts and accessories of motor vehicles
HS,3,870850,8708,Parts and accessories of motor vehicles
HS,3,870899,8708,Parts and accessories of motor vehicles
HS,2,8711,87,Motorcycles and cycles
HS,3,871110,8711,Motorcycles and cycles
HS,3,871120,8711,Motorcycles and cycles
HS,3,871160,8711,Motorcycles and cycles
HS,1,90,,Optical and measuring instruments
HS,2,9018,90,Medical or surgical instruments
HS,3,901831,9018,Medical or surgical instruments
HS,3,901839,9018,Medical or surgical instruments
HS,3,901890,9018,Medical or surgical instruments
HS,2,9026,90,Instruments for measuring flow or level
HS,3,902610,9026,Instruments for measuring flow or level
HS,3,902620,9026,Instruments for measuring flow or level
HS,2,9031,90,Measuring or checking instruments nes
HS,3,903149,9031,Measuring or checking instruments nes
HS,3,903180,9031,Measuring or checking instruments nes
HS,1,94,,Furniture; bedding; lamps
HS,2,9401,94,Seats and parts thereof
HS,3,940161,9401,Seats and parts thereof
HS,3,940169,9401,Seats and parts thereof
HS,3,940171,9401,Seats and parts thereof
HS,2,9403,94,Other furniture and parts
HS,3,940310,9403,Other furniture and parts
HS,3,940330,9403,Other furniture and parts
HS,3,940360,9403,Other furniture and parts
HS,2,9404,94,Mattresses and bedding
HS,3,940421,9404,Mattresses and bedding
HS,3,940429,9404,Mattresses and bedding
HS,2,9405,94,Luminaires and lighting fittings
HS,3,940511,9405,Luminaires and lighting fittings
HS,3,940542,9405,Luminaires and lighting fittings
HS,1,95,,"Toys, games and sports requisites"
HS,2,9503,95,"Tricycles, dolls, other toys"
HS,3,950300,9503,"Tricycles, dolls, other toys"
HS,2,9504,95,"Video game consoles, table games"
HS,3,950430,9504,"Video game consoles, table games"
HS,3,950450,9504,"Video game consoles, table games"
HS,2,9506,95,Sports and exercise equipment
HS,3,950631,9506,Sports and exercise equipment
HS,3,950651,9506,Sports and exercise equipment
HS,3,950699,9506,Sports and exercise equipment
KSIC,1,A,,"Agriculture, forestry and fishing"
KSIC,2,01,A,Crop and animal production
KSIC,3,011,01,Crop and animal production
KSIC,3,012,01,Crop and animal production
KSIC,3,013,01,Crop and animal production
KSIC,2,02,A,Forestry and logging
KSIC,3,020,02,Forestry and logging
KSIC,2,03,A,Fishing and aquaculture
KSIC,3,031,03,Fishing and aquaculture
KSIC,3,032,03,Fishing and aquaculture
KSIC,1,B,,Mining and quarrying
KSIC,2,07,B,Mining of non-metallic minerals
KSIC,3,071,07,Mining of non-metallic minerals
KSIC,3,072,07,Mining of non-metallic minerals
KSIC,1,C,,Manufacturing
KSIC,2,10,C,Manufacture of food products
KSIC,3,101,10,Manufacture of food products
KSIC,3,102,10,Manufacture of food products
KSIC,3,103,10,Manufacture of food products
KSIC,3,104,10,Manufacture of food products
KSIC,3,105,10,Manufacture of food products
KSIC,3,106,10,Manufacture of food products
KSIC,3,107,10,Manufacture of food products
KSIC,3,108,10,Manufacture of food products
KSIC,2,11,C,Manufacture of beverages
KSIC,3,111,11,Manufacture of beverages
KSIC,3,112,11,Manufacture of beverages
KSIC,2,13,C,Manufacture of textiles
KSIC,3,131,13,Manufacture of textiles
KSIC,3,132,13,Manufacture of textiles
KSIC,3,133,13,Manufacture of textiles
KSIC,2,14,C,Manufacture of wearing apparel
KSIC,3,141,14,Manufacture of wearing apparel
KSIC,3,143,14,Manufacture of wearing apparel
KSIC,2,17,C,Manufacture of pulp and paper
KSIC,3,171,17,Manufacture of pulp and paper
KSIC,3,179,17,Manufacture of pulp and paper
KSIC,2,20,C,Manufacture of chemicals
KSIC,3,201,20,Manufacture of chemicals
KSIC,3,202,20,Manufacture of chemicals
KSIC,3,204,20,Manufacture of chemicals
KSIC,2,21,C,Manufacture of pharmaceuticals
KSIC,3,211,21,Manufacture of pharmaceuticals
KSIC,3,212,21,Manufacture of pharmaceuticals
KSIC,3,213,21,Manufacture of pharmaceuticals
KSIC,2,22,C,Manufacture of rubber and plastics
KSIC,3,221,22,Manufacture of rubber and plastics
KSIC,3,222,22,Manufacture of rubber and plastics
KSIC,2,23,C,Manufacture of non-metallic mineral products
KSIC,3,231,23,Manufacture of non-metallic mineral products
KSIC,3,232,23,Manufacture of non-metallic mineral products
KSIC,2,24,C,Manufacture of basic metals
KSIC,3,241,24,Manufacture of basic metals
KSIC,3,243,24,Manufacture of basic metals
KSIC,2,25,C,Manufacture of fabricated metal products
KSIC,3,251,25,Manufacture of fabricated metal products
KSIC,3,252,25,Manufacture of fabricated metal products
KSIC,3,259,25,Manufacture of fabricated metal products
KSIC,2,26,C,Manufacture of electronic components
KSIC,3,261,26,Manufacture of electronic components
KSIC,3,262,26,Manufacture of electronic components
KSIC,3,263,26,Manufacture of electronic components
KSIC,3,264,26,Manufacture of electronic components
KSIC,2,27,C,Manufacture of medical and optical instruments
KSIC,3,271,27,Manufacture of medical and optical instruments
KSIC,3,272,27,Manufacture of medical and optical instruments
KSIC,2,28,C,Manufacture of electrical equipment
KSIC,3,281,28,Manufacture of electrical equipment
KSIC,3,282,28,Manufacture of electrical equipment
KSIC,3,285,28,Manufacture of electrical equipment
KSIC,2,29,C,Manufacture of machinery and equipment
KSIC,3,291,29,Manufacture of machinery and equipment
KSIC,3,292,29,Manufacture of machinery and equipment
KSIC,2,30,C,Manufacture of motor vehicles and trailers
KSIC,3,301,30,Manufacture of motor vehicles and trailers
KSIC,3,303,30,Manufacture of motor vehicles and trailers
KSIC,3,304,30,Manufacture of motor vehicles and trailers
KSIC,2,31,C,Manufacture of other transport equipment
KSIC,3,311,31,Manufacture of other transport equipment
KSIC,3,312,31,Manufacture of other transport equipment
KSIC,2,33,C,Other manufacturing
KSIC,3,332,33,Other manufacturing
KSIC,3,333,33,Other manufacturing
KSIC,1,D,,"Electricity, gas and steam supply"
KSIC,2,35,D,"Electricity, gas and steam supply"
KSIC,3,351,35,"Electricity, gas and steam supply"
KSIC,3,353,35,"Electricity, gas and steam supply"
KSIC,1,E,,Water supply; waste management
KSIC,2,37,E,Sewage treatment
KSIC,3,370,37,Sewage treatment
KSIC,2,38,E,Waste collection and disposal
KSIC,3,381,38,Waste collection and disposal
KSIC,3,382,38,Waste collection and disposal
KSIC,1,F,,Construction
KSIC,2,41,F,General construction
KSIC,3,411,41,General construction
KSIC,3,412,41,General construction
KSIC,2,42,F,Special trade construction
KSIC,3,421,42,Special trade construction
KSIC,3,423,42,Special trade construction
KSIC,1,G,,Wholesale and retail trade
KSIC,2,45,G,Sale of motor vehicles and parts
KSIC,3,451,45,Sale of motor vehicles and parts
KSIC,3,452,45,Sale of motor vehicles and parts
KSIC,2,46,G,Wholesale trade
KSIC,3,461,46,Wholesale trade
KSIC,3,463,46,Wholesale trade
KSIC,3,465,46,Wholesale trade
KSIC,3,467,46,Wholesale trade
KSIC,3,468,46,Wholesale trade
KSIC,2,47,G,Retail trade
KSIC,3,471,47,Retail trade
KSIC,3,472,47,Retail trade
KSIC,3,474,47,Retail trade
KSIC,3,478,47,Retail trade
KSIC,1,H,,Transportation and storage
KSIC,2,49,H,Land transport
KSIC,3,493,49,Land transport
KSIC,3,494,49,Land transport
KSIC,2,50,H,Water transport
KSIC,3,501,50,Water transport
KSIC,3,502,50,Water transport
KSIC,2,51,H,Air transport
KSIC,3,511,51,Air transport
KSIC,2,52,H,Warehousing and transport support
KSIC,3,521,52,Warehousing and transport support
KSIC,3,529,52,Warehousing and transport support
KSIC,1,I,,Accommodation and food service activities
KSIC,2,55,I,Accommodation
KSIC,3,551,55,Accommodation
KSIC,3,559,55,Accommodation
KSIC,2,56,I,Food and beverage service activities
KSIC,3,561,56,Food and beverage service activities
KSIC,3,562,56,Food and beverage service activities
KSIC,1,J,,Information and communications
KSIC,2,58,J,Publishing activities
KSIC,3,581,58,Publishing activities
KSIC,3,582,58,Publishing activities
KSIC,2,62,J,Computer programming and consultancy
KSIC,3,620,62,Computer programming and consultancy
KSIC,2,63,J,Information service activities
KSIC,3,631,63,Information service activities
KSIC,3,639,63,Information service activities
KSIC,1,K,,Financial and insurance activities
KSIC,2,64,K,Financial service activities
KSIC,3,641,64,Financial service activities
KSIC,3,642,64,Financial service activities
KSIC,2,65,K,Insurance and pension funding
KSIC,3,651,65,Insurance and pension funding
KSIC,3,652,65,Insurance and pension funding
KSIC,2,66,K,Auxiliary financial activities
KSIC,3,661,66,Auxiliary financial activities
KSIC,3,662,66,Auxiliary financial activities
KSIC,1,L,,Real estate activities
KSIC,2,68,L,Real estate activities
KSIC,3,681,68,Real estate activities
KSIC,3,682,68,Real estate activities
KSIC,1,M,,"Professional, scientific and technical activities"
KSIC,2,70,M,Research and development
KSIC,3,701,70,Research and development
KSIC,3,702,70,Research and development
KSIC,2,71,M,Professional services
KSIC,3,711,71,Professional services
KSIC,3,712,71,Professional services
KSIC,3,713,71,Professional services
KSIC,2,72,M,Architectural and engineering services
KSIC,3,721,72,Architectural and engineering services
KSIC,3,729,72,Architectural and engineering services
KSIC,2,73,M,Other professional services
KSIC,3,731,73,Other professional services
KSIC,3,732,73,Other professional services
KSIC,1,N,,Business facilities and support services
KSIC,2,74,N,Business facilities management
KSIC,3,741,74,Business facilities management
KSIC,3,742,74,Business facilities management
KSIC,2,75,N,Business support services
KSIC,3,751,75,Business support services
KSIC,3,753,75,Business support services
KSIC,2,76,N,Rental and leasing activities
KSIC,3,761,76,Rental and leasing activities
KSIC,3,763,76,Rental and leasing activities
KSIC,1,O,,Public administration and defence
KSIC,2,84,O,Public administration and defence
KSIC,3,841,84,Public administration and defence
KSIC,3,842,84,Public administration and defence
KSIC,1,P,,Education
KSIC,2,85,P,Education
KSIC,3,851,85,Education
KSIC,3,852,85,Education
KSIC,3,855,85,Education
KSIC,1,Q,,Human health and social work activities
KSIC,2,86,Q,Human health activities
KSIC,3,861,86,Human health activities
KSIC,3,862,86,Human health activities
KSIC,2,87,Q,Social work activities
KSIC,3,871,87,Social work activities
KSIC,3,872,87,Social work activities
KSIC,1,R,,"Arts, sports and recreation"
KSIC,2,90,R,Creative arts and recreation
KSIC,3,901,90,Creative arts and recreation
KSIC,3,902,90,Creative arts and recreation
KSIC,2,91,R,Sports and amusement activities
KSIC,3,911,91,Sports and amusement activities
KSIC,3,912,91,Sports and amusement activities
KSIC,1,S,,Membership organizations and personal services
KSIC,2,94,S,Membership organizations
KSIC,3,941,94,Membership organizations
KSIC,3,942,94,Membership organizations
KSIC,2,95,S,Repair of computers and goods
KSIC,3,951,95,Repair of computers and goods
KSIC,3,952,95,Repair of computers and goods
KSIC,2,96,S,Other personal services
KSIC,3,961,96,Other personal services
KSIC,3,962,96,Other personal services
KSIC,1,T,,Activities of households as employers
KSIC,2,97,T,Households as employers of domestic personnel
KSIC,3,970,97,Households as employers of domestic personnel
KSIC,2,98,T,Undifferentiated household production
KSIC,3,981,98,Undifferentiated household production
KSIC,3,982,98,Undifferentiated household production
KSIC,1,U,,Extraterritorial organizations
KSIC,2,99,U,Extraterritorial organizations and bodies
KSIC,3,990,99,Extraterritorial organizations and bodies
)csv";

}  // namespace dwellsim::data

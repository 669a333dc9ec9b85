// Generated by scripts/gen_emoji_table.py; do not edit by hand.
#include "slicecheck/preprocess.hpp"

namespace slicecheck {

namespace {

struct EmojiEntry {
  const char* utf8;
  const char* name;
};

const EmojiEntry kEmojiEntries[] = {
    {"\xe2\x98\x80", "black-sun-with-rays"},  // U+2600
    {"\xe2\x98\x81", "cloud"},  // U+2601
    {"\xe2\x98\x82", "umbrella"},  // U+2602
    {"\xe2\x98\x83", "snowman"},  // U+2603
    {"\xe2\x98\x84", "comet"},  // U+2604
    {"\xe2\x98\x85", "black-star"},  // U+2605
    {"\xe2\x98\x86", "white-star"},  // U+2606
    {"\xe2\x98\x87", "lightning"},  // U+2607
    {"\xe2\x98\x88", "thunderstorm"},  // U+2608
    {"\xe2\x98\x89", "sun"},  // U+2609
    {"\xe2\x98\x8a", "ascending-node"},  // U+260A
    {"\xe2\x98\x8b", "descending-node"},  // U+260B
    {"\xe2\x98\x8c", "conjunction"},  // U+260C
    {"\xe2\x98\x8d", "opposition"},  // U+260D
    {"\xe2\x98\x8e", "black-telephone"},  // U+260E
    {"\xe2\x98\x8f", "white-telephone"},  // U+260F
    {"\xe2\x98\x90", "ballot-box"},  // U+2610
    {"\xe2\x98\x91", "ballot-box-with-check"},  // U+2611
    {"\xe2\x98\x92", "ballot-box-with-x"},  // U+2612
    {"\xe2\x98\x93", "saltire"},  // U+2613
    {"\xe2\x98\x94", "umbrella-with-rain-drops"},  // U+2614
    {"\xe2\x98\x95", "hot-beverage"},  // U+2615
    {"\xe2\x98\x96", "white-shogi-piece"},  // U+2616
    {"\xe2\x98\x97", "black-shogi-piece"},  // U+2617
    {"\xe2\x98\x98", "shamrock"},  // U+2618
    {"\xe2\x98\x99", "reversed-rotated-floral-heart-bullet"},  // U+2619
    {"\xe2\x98\x9a", "black-left-pointing-index"},  // U+261A
    {"\xe2\x98\x9b", "black-right-pointing-index"},  // U+261B
    {"\xe2\x98\x9c", "white-left-pointing-index"},  // U+261C
    {"\xe2\x98\x9d", "white-up-pointing-index"},  // U+261D
    {"\xe2\x98\x9e", "white-right-pointing-index"},  // U+261E
    {"\xe2\x98\x9f", "white-down-pointing-index"},  // U+261F
    {"\xe2\x98\xa0", "skull-and-crossbones"},  // U+2620
    {"\xe2\x98\xa1", "caution-sign"},  // U+2621
    {"\xe2\x98\xa2", "radioactive-sign"},  // U+2622
    {"\xe2\x98\xa3", "biohazard-sign"},  // U+2623
    {"\xe2\x98\xa4", "caduceus"},  // U+2624
    {"\xe2\x98\xa5", "ankh"},  // U+2625
    {"\xe2\x98\xa6", "orthodox-cross"},  // U+2626
    {"\xe2\x98\xa7", "chi-rho"},  // U+2627
    {"\xe2\x98\xa8", "cross-of-lorraine"},  // U+2628
    {"\xe2\x98\xa9", "cross-of-jerusalem"},  // U+2629
    {"\xe2\x98\xaa", "star-and-crescent"},  // U+262A
    {"\xe2\x98\xab", "farsi"},  // U+262B
    {"\xe2\x98\xac", "adi-shakti"},  // U+262C
    {"\xe2\x98\xad", "hammer-and-sickle"},  // U+262D
    {"\xe2\x98\xae", "peace"},  // U+262E
    {"\xe2\x98\xaf", "yin-yang"},  // U+262F
    {"\xe2\x98\xb0", "trigram-for-heaven"},  // U+2630
    {"\xe2\x98\xb1", "trigram-for-lake"},  // U+2631
    {"\xe2\x98\xb2", "trigram-for-fire"},  // U+2632
    {"\xe2\x98\xb3", "trigram-for-thunder"},  // U+2633
    {"\xe2\x98\xb4", "trigram-for-wind"},  // U+2634
    {"\xe2\x98\xb5", "trigram-for-water"},  // U+2635
    {"\xe2\x98\xb6", "trigram-for-mountain"},  // U+2636
    {"\xe2\x98\xb7", "trigram-for-earth"},  // U+2637
    {"\xe2\x98\xb8", "wheel-of-dharma"},  // U+2638
    {"\xe2\x98\xb9", "white-frowning-face"},  // U+2639
    {"\xe2\x98\xba", "white-smiling-face"},  // U+263A
    {"\xe2\x98\xbb", "black-smiling-face"},  // U+263B
    {"\xe2\x98\xbc", "white-sun-with-rays"},  // U+263C
    {"\xe2\x98\xbd", "first-quarter-moon"},  // U+263D
    {"\xe2\x98\xbe", "last-quarter-moon"},  // U+263E
    {"\xe2\x98\xbf", "mercury"},  // U+263F
    {"\xe2\x99\x80", "female-sign"},  // U+2640
    {"\xe2\x99\x81", "earth"},  // U+2641
    {"\xe2\x99\x82", "male-sign"},  // U+2642
    {"\xe2\x99\x83", "jupiter"},  // U+2643
    {"\xe2\x99\x84", "saturn"},  // U+2644
    {"\xe2\x99\x85", "uranus"},  // U+2645
    {"\xe2\x99\x86", "neptune"},  // U+2646
    {"\xe2\x99\x87", "pluto"},  // U+2647
    {"\xe2\x99\x88", "aries"},  // U+2648
    {"\xe2\x99\x89", "taurus"},  // U+2649
    {"\xe2\x99\x8a", "gemini"},  // U+264A
    {"\xe2\x99\x8b", "cancer"},  // U+264B
    {"\xe2\x99\x8c", "leo"},  // U+264C
    {"\xe2\x99\x8d", "virgo"},  // U+264D
    {"\xe2\x99\x8e", "libra"},  // U+264E
    {"\xe2\x99\x8f", "scorpius"},  // U+264F
    {"\xe2\x99\x90", "sagittarius"},  // U+2650
    {"\xe2\x99\x91", "capricorn"},  // U+2651
    {"\xe2\x99\x92", "aquarius"},  // U+2652
    {"\xe2\x99\x93", "pisces"},  // U+2653
    {"\xe2\x99\x94", "white-chess-king"},  // U+2654
    {"\xe2\x99\x95", "white-chess-queen"},  // U+2655
    {"\xe2\x99\x96", "white-chess-rook"},  // U+2656
    {"\xe2\x99\x97", "white-chess-bishop"},  // U+2657
    {"\xe2\x99\x98", "white-chess-knight"},  // U+2658
    {"\xe2\x99\x99", "white-chess-pawn"},  // U+2659
    {"\xe2\x99\x9a", "black-chess-king"},  // U+265A
    {"\xe2\x99\x9b", "black-chess-queen"},  // U+265B
    {"\xe2\x99\x9c", "black-chess-rook"},  // U+265C
    {"\xe2\x99\x9d", "black-chess-bishop"},  // U+265D
    {"\xe2\x99\x9e", "black-chess-knight"},  // U+265E
    {"\xe2\x99\x9f", "black-chess-pawn"},  // U+265F
    {"\xe2\x99\xa0", "black-spade-suit"},  // U+2660
    {"\xe2\x99\xa1", "white-heart-suit"},  // U+2661
    {"\xe2\x99\xa2", "white-diamond-suit"},  // U+2662
    {"\xe2\x99\xa3", "black-club-suit"},  // U+2663
    {"\xe2\x99\xa4", "white-spade-suit"},  // U+2664
    {"\xe2\x99\xa5", "black-heart-suit"},  // U+2665
    {"\xe2\x99\xa6", "black-diamond-suit"},  // U+2666
    {"\xe2\x99\xa7", "white-club-suit"},  // U+2667
    {"\xe2\x99\xa8", "hot-springs"},  // U+2668
    {"\xe2\x99\xa9", "quarter-note"},  // U+2669
    {"\xe2\x99\xaa", "eighth-note"},  // U+266A
    {"\xe2\x99\xab", "beamed-eighth-notes"},  // U+266B
    {"\xe2\x99\xac", "beamed-sixteenth-notes"},  // U+266C
    {"\xe2\x99\xad", "music-flat-sign"},  // U+266D
    {"\xe2\x99\xae", "music-natural-sign"},  // U+266E
    {"\xe2\x99\xaf", "music-sharp-sign"},  // U+266F
    {"\xe2\x99\xb0", "west-syriac-cross"},  // U+2670
    {"\xe2\x99\xb1", "east-syriac-cross"},  // U+2671
    {"\xe2\x99\xb2", "universal-recycling"},  // U+2672
    {"\xe2\x99\xb3", "recycling-symbol-for-type-1-plastics"},  // U+2673
    {"\xe2\x99\xb4", "recycling-symbol-for-type-2-plastics"},  // U+2674
    {"\xe2\x99\xb5", "recycling-symbol-for-type-3-plastics"},  // U+2675
    {"\xe2\x99\xb6", "recycling-symbol-for-type-4-plastics"},  // U+2676
    {"\xe2\x99\xb7", "recycling-symbol-for-type-5-plastics"},  // U+2677
    {"\xe2\x99\xb8", "recycling-symbol-for-type-6-plastics"},  // U+2678
    {"\xe2\x99\xb9", "recycling-symbol-for-type-7-plastics"},  // U+2679
    {"\xe2\x99\xba", "recycling-symbol-for-generic-materials"},  // U+267A
    {"\xe2\x99\xbb", "black-universal-recycling"},  // U+267B
    {"\xe2\x99\xbc", "recycled-paper"},  // U+267C
    {"\xe2\x99\xbd", "partially-recycled-paper"},  // U+267D
    {"\xe2\x99\xbe", "permanent-paper-sign"},  // U+267E
    {"\xe2\x99\xbf", "wheelchair"},  // U+267F
    {"\xe2\x9a\x80", "die-face-1"},  // U+2680
    {"\xe2\x9a\x81", "die-face-2"},  // U+2681
    {"\xe2\x9a\x82", "die-face-3"},  // U+2682
    {"\xe2\x9a\x83", "die-face-4"},  // U+2683
    {"\xe2\x9a\x84", "die-face-5"},  // U+2684
    {"\xe2\x9a\x85", "die-face-6"},  // U+2685
    {"\xe2\x9a\x86", "white-circle-with-dot-right"},  // U+2686
    {"\xe2\x9a\x87", "white-circle-with-two-dots"},  // U+2687
    {"\xe2\x9a\x88", "black-circle-with-white-dot-right"},  // U+2688
    {"\xe2\x9a\x89", "black-circle-with-two-white-dots"},  // U+2689
    {"\xe2\x9a\x8a", "monogram-for-yang"},  // U+268A
    {"\xe2\x9a\x8b", "monogram-for-yin"},  // U+268B
    {"\xe2\x9a\x8c", "digram-for-greater-yang"},  // U+268C
    {"\xe2\x9a\x8d", "digram-for-lesser-yin"},  // U+268D
    {"\xe2\x9a\x8e", "digram-for-lesser-yang"},  // U+268E
    {"\xe2\x9a\x8f", "digram-for-greater-yin"},  // U+268F
    {"\xe2\x9a\x90", "white-flag"},  // U+2690
    {"\xe2\x9a\x91", "black-flag"},  // U+2691
    {"\xe2\x9a\x92", "hammer-and-pick"},  // U+2692
    {"\xe2\x9a\x93", "anchor"},  // U+2693
    {"\xe2\x9a\x94", "crossed-swords"},  // U+2694
    {"\xe2\x9a\x95", "staff-of-aesculapius"},  // U+2695
    {"\xe2\x9a\x96", "scales"},  // U+2696
    {"\xe2\x9a\x97", "alembic"},  // U+2697
    {"\xe2\x9a\x98", "flower"},  // U+2698
    {"\xe2\x9a\x99", "gear"},  // U+2699
    {"\xe2\x9a\x9a", "staff-of-hermes"},  // U+269A
    {"\xe2\x9a\x9b", "atom"},  // U+269B
    {"\xe2\x9a\x9c", "fleur-de-lis"},  // U+269C
    {"\xe2\x9a\x9d", "outlined-white-star"},  // U+269D
    {"\xe2\x9a\x9e", "three-lines-converging-right"},  // U+269E
    {"\xe2\x9a\x9f", "three-lines-converging-left"},  // U+269F
    {"\xe2\x9a\xa0", "warning-sign"},  // U+26A0
    {"\xe2\x9a\xa1", "high-voltage-sign"},  // U+26A1
    {"\xe2\x9a\xa2", "doubled-female-sign"},  // U+26A2
    {"\xe2\x9a\xa3", "doubled-male-sign"},  // U+26A3
    {"\xe2\x9a\xa4", "interlocked-female-and-male-sign"},  // U+26A4
    {"\xe2\x9a\xa5", "male-and-female-sign"},  // U+26A5
    {"\xe2\x9a\xa6", "male-with-stroke-sign"},  // U+26A6
    {"\xe2\x9a\xa7", "male-with-stroke-and-male-and-female-sign"},  // U+26A7
    {"\xe2\x9a\xa8", "vertical-male-with-stroke-sign"},  // U+26A8
    {"\xe2\x9a\xa9", "horizontal-male-with-stroke-sign"},  // U+26A9
    {"\xe2\x9a\xaa", "medium-white-circle"},  // U+26AA
    {"\xe2\x9a\xab", "medium-black-circle"},  // U+26AB
    {"\xe2\x9a\xac", "medium-small-white-circle"},  // U+26AC
    {"\xe2\x9a\xad", "marriage"},  // U+26AD
    {"\xe2\x9a\xae", "divorce"},  // U+26AE
    {"\xe2\x9a\xaf", "unmarried-partnership"},  // U+26AF
    {"\xe2\x9a\xb0", "coffin"},  // U+26B0
    {"\xe2\x9a\xb1", "funeral-urn"},  // U+26B1
    {"\xe2\x9a\xb2", "neuter"},  // U+26B2
    {"\xe2\x9a\xb3", "ceres"},  // U+26B3
    {"\xe2\x9a\xb4", "pallas"},  // U+26B4
    {"\xe2\x9a\xb5", "juno"},  // U+26B5
    {"\xe2\x9a\xb6", "vesta"},  // U+26B6
    {"\xe2\x9a\xb7", "chiron"},  // U+26B7
    {"\xe2\x9a\xb8", "black-moon-lilith"},  // U+26B8
    {"\xe2\x9a\xb9", "sextile"},  // U+26B9
    {"\xe2\x9a\xba", "semisextile"},  // U+26BA
    {"\xe2\x9a\xbb", "quincunx"},  // U+26BB
    {"\xe2\x9a\xbc", "sesquiquadrate"},  // U+26BC
    {"\xe2\x9a\xbd", "soccer-ball"},  // U+26BD
    {"\xe2\x9a\xbe", "baseball"},  // U+26BE
    {"\xe2\x9a\xbf", "squared-key"},  // U+26BF
    {"\xe2\x9b\x80", "white-draughts-man"},  // U+26C0
    {"\xe2\x9b\x81", "white-draughts-king"},  // U+26C1
    {"\xe2\x9b\x82", "black-draughts-man"},  // U+26C2
    {"\xe2\x9b\x83", "black-draughts-king"},  // U+26C3
    {"\xe2\x9b\x84", "snowman-without-snow"},  // U+26C4
    {"\xe2\x9b\x85", "sun-behind-cloud"},  // U+26C5
    {"\xe2\x9b\x86", "rain"},  // U+26C6
    {"\xe2\x9b\x87", "black-snowman"},  // U+26C7
    {"\xe2\x9b\x88", "thunder-cloud-and-rain"},  // U+26C8
    {"\xe2\x9b\x89", "turned-white-shogi-piece"},  // U+26C9
    {"\xe2\x9b\x8a", "turned-black-shogi-piece"},  // U+26CA
    {"\xe2\x9b\x8b", "white-diamond-in-square"},  // U+26CB
    {"\xe2\x9b\x8c", "crossing-lanes"},  // U+26CC
    {"\xe2\x9b\x8d", "disabled-car"},  // U+26CD
    {"\xe2\x9b\x8e", "ophiuchus"},  // U+26CE
    {"\xe2\x9b\x8f", "pick"},  // U+26CF
    {"\xe2\x9b\x90", "car-sliding"},  // U+26D0
    {"\xe2\x9b\x91", "helmet-with-white-cross"},  // U+26D1
    {"\xe2\x9b\x92", "circled-crossing-lanes"},  // U+26D2
    {"\xe2\x9b\x93", "chains"},  // U+26D3
    {"\xe2\x9b\x94", "no-entry"},  // U+26D4
    {"\xe2\x9b\x95", "alternate-one-way-left-way-traffic"},  // U+26D5
    {"\xe2\x9b\x96", "black-two-way-left-way-traffic"},  // U+26D6
    {"\xe2\x9b\x97", "white-two-way-left-way-traffic"},  // U+26D7
    {"\xe2\x9b\x98", "black-left-lane-merge"},  // U+26D8
    {"\xe2\x9b\x99", "white-left-lane-merge"},  // U+26D9
    {"\xe2\x9b\x9a", "drive-slow-sign"},  // U+26DA
    {"\xe2\x9b\x9b", "heavy-white-down-pointing-triangle"},  // U+26DB
    {"\xe2\x9b\x9c", "left-closed-entry"},  // U+26DC
    {"\xe2\x9b\x9d", "squared-saltire"},  // U+26DD
    {"\xe2\x9b\x9e", "falling-diagonal-in-white-circle-in-black-square"},  // U+26DE
    {"\xe2\x9b\x9f", "black-truck"},  // U+26DF
    {"\xe2\x9b\xa0", "restricted-left-entry-1"},  // U+26E0
    {"\xe2\x9b\xa1", "restricted-left-entry-2"},  // U+26E1
    {"\xe2\x9b\xa2", "astronomical-symbol-for-uranus"},  // U+26E2
    {"\xe2\x9b\xa3", "heavy-circle-with-stroke-and-two-dots-above"},  // U+26E3
    {"\xe2\x9b\xa4", "pentagram"},  // U+26E4
    {"\xe2\x9b\xa5", "right-handed-interlaced-pentagram"},  // U+26E5
    {"\xe2\x9b\xa6", "left-handed-interlaced-pentagram"},  // U+26E6
    {"\xe2\x9b\xa7", "inverted-pentagram"},  // U+26E7
    {"\xe2\x9b\xa8", "black-cross-on-shield"},  // U+26E8
    {"\xe2\x9b\xa9", "shinto-shrine"},  // U+26E9
    {"\xe2\x9b\xaa", "church"},  // U+26EA
    {"\xe2\x9b\xab", "castle"},  // U+26EB
    {"\xe2\x9b\xac", "historic-site"},  // U+26EC
    {"\xe2\x9b\xad", "gear-without-hub"},  // U+26ED
    {"\xe2\x9b\xae", "gear-with-handles"},  // U+26EE
    {"\xe2\x9b\xaf", "map-symbol-for-lighthouse"},  // U+26EF
    {"\xe2\x9b\xb0", "mountain"},  // U+26F0
    {"\xe2\x9b\xb1", "umbrella-on-ground"},  // U+26F1
    {"\xe2\x9b\xb2", "fountain"},  // U+26F2
    {"\xe2\x9b\xb3", "flag-in-hole"},  // U+26F3
    {"\xe2\x9b\xb4", "ferry"},  // U+26F4
    {"\xe2\x9b\xb5", "sailboat"},  // U+26F5
    {"\xe2\x9b\xb6", "square-four-corners"},  // U+26F6
    {"\xe2\x9b\xb7", "skier"},  // U+26F7
    {"\xe2\x9b\xb8", "ice-skate"},  // U+26F8
    {"\xe2\x9b\xb9", "person-with-ball"},  // U+26F9
    {"\xe2\x9b\xba", "tent"},  // U+26FA
    {"\xe2\x9b\xbb", "japanese-bank"},  // U+26FB
    {"\xe2\x9b\xbc", "headstone-graveyard"},  // U+26FC
    {"\xe2\x9b\xbd", "fuel-pump"},  // U+26FD
    {"\xe2\x9b\xbe", "cup-on-black-square"},  // U+26FE
    {"\xe2\x9b\xbf", "white-flag-with-horizontal-middle-black-stripe"},  // U+26FF
    {"\xe2\x9c\x80", "black-safety-scissors"},  // U+2700
    {"\xe2\x9c\x81", "upper-blade-scissors"},  // U+2701
    {"\xe2\x9c\x82", "black-scissors"},  // U+2702
    {"\xe2\x9c\x83", "lower-blade-scissors"},  // U+2703
    {"\xe2\x9c\x84", "white-scissors"},  // U+2704
    {"\xe2\x9c\x85", "white-heavy-check-mark"},  // U+2705
    {"\xe2\x9c\x86", "telephone-location-sign"},  // U+2706
    {"\xe2\x9c\x87", "tape-drive"},  // U+2707
    {"\xe2\x9c\x88", "airplane"},  // U+2708
    {"\xe2\x9c\x89", "envelope"},  // U+2709
    {"\xe2\x9c\x8a", "raised-fist"},  // U+270A
    {"\xe2\x9c\x8b", "raised-hand"},  // U+270B
    {"\xe2\x9c\x8c", "victory-hand"},  // U+270C
    {"\xe2\x9c\x8d", "writing-hand"},  // U+270D
    {"\xe2\x9c\x8e", "lower-right-pencil"},  // U+270E
    {"\xe2\x9c\x8f", "pencil"},  // U+270F
    {"\xe2\x9c\x90", "upper-right-pencil"},  // U+2710
    {"\xe2\x9c\x91", "white-nib"},  // U+2711
    {"\xe2\x9c\x92", "black-nib"},  // U+2712
    {"\xe2\x9c\x93", "check-mark"},  // U+2713
    {"\xe2\x9c\x94", "heavy-check-mark"},  // U+2714
    {"\xe2\x9c\x95", "multiplication-x"},  // U+2715
    {"\xe2\x9c\x96", "heavy-multiplication-x"},  // U+2716
    {"\xe2\x9c\x97", "ballot-x"},  // U+2717
    {"\xe2\x9c\x98", "heavy-ballot-x"},  // U+2718
    {"\xe2\x9c\x99", "outlined-greek-cross"},  // U+2719
    {"\xe2\x9c\x9a", "heavy-greek-cross"},  // U+271A
    {"\xe2\x9c\x9b", "open-centre-cross"},  // U+271B
    {"\xe2\x9c\x9c", "heavy-open-centre-cross"},  // U+271C
    {"\xe2\x9c\x9d", "latin-cross"},  // U+271D
    {"\xe2\x9c\x9e", "shadowed-white-latin-cross"},  // U+271E
    {"\xe2\x9c\x9f", "outlined-latin-cross"},  // U+271F
    {"\xe2\x9c\xa0", "maltese-cross"},  // U+2720
    {"\xe2\x9c\xa1", "star-of-david"},  // U+2721
    {"\xe2\x9c\xa2", "four-teardrop-spoked-asterisk"},  // U+2722
    {"\xe2\x9c\xa3", "four-balloon-spoked-asterisk"},  // U+2723
    {"\xe2\x9c\xa4", "heavy-four-balloon-spoked-asterisk"},  // U+2724
    {"\xe2\x9c\xa5", "four-club-spoked-asterisk"},  // U+2725
    {"\xe2\x9c\xa6", "black-four-pointed-star"},  // U+2726
    {"\xe2\x9c\xa7", "white-four-pointed-star"},  // U+2727
    {"\xe2\x9c\xa8", "sparkles"},  // U+2728
    {"\xe2\x9c\xa9", "stress-outlined-white-star"},  // U+2729
    {"\xe2\x9c\xaa", "circled-white-star"},  // U+272A
    {"\xe2\x9c\xab", "open-centre-black-star"},  // U+272B
    {"\xe2\x9c\xac", "black-centre-white-star"},  // U+272C
    {"\xe2\x9c\xad", "outlined-black-star"},  // U+272D
    {"\xe2\x9c\xae", "heavy-outlined-black-star"},  // U+272E
    {"\xe2\x9c\xaf", "pinwheel-star"},  // U+272F
    {"\xe2\x9c\xb0", "shadowed-white-star"},  // U+2730
    {"\xe2\x9c\xb1", "heavy-asterisk"},  // U+2731
    {"\xe2\x9c\xb2", "open-centre-asterisk"},  // U+2732
    {"\xe2\x9c\xb3", "eight-spoked-asterisk"},  // U+2733
    {"\xe2\x9c\xb4", "eight-pointed-black-star"},  // U+2734
    {"\xe2\x9c\xb5", "eight-pointed-pinwheel-star"},  // U+2735
    {"\xe2\x9c\xb6", "six-pointed-black-star"},  // U+2736
    {"\xe2\x9c\xb7", "eight-pointed-rectilinear-black-star"},  // U+2737
    {"\xe2\x9c\xb8", "heavy-eight-pointed-rectilinear-black-star"},  // U+2738
    {"\xe2\x9c\xb9", "twelve-pointed-black-star"},  // U+2739
    {"\xe2\x9c\xba", "sixteen-pointed-asterisk"},  // U+273A
    {"\xe2\x9c\xbb", "teardrop-spoked-asterisk"},  // U+273B
    {"\xe2\x9c\xbc", "open-centre-teardrop-spoked-asterisk"},  // U+273C
    {"\xe2\x9c\xbd", "heavy-teardrop-spoked-asterisk"},  // U+273D
    {"\xe2\x9c\xbe", "six-petalled-black-and-white-florette"},  // U+273E
    {"\xe2\x9c\xbf", "black-florette"},  // U+273F
    {"\xe2\x9d\x80", "white-florette"},  // U+2740
    {"\xe2\x9d\x81", "eight-petalled-outlined-black-florette"},  // U+2741
    {"\xe2\x9d\x82", "circled-open-centre-eight-pointed-star"},  // U+2742
    {"\xe2\x9d\x83", "heavy-teardrop-spoked-pinwheel-asterisk"},  // U+2743
    {"\xe2\x9d\x84", "snowflake"},  // U+2744
    {"\xe2\x9d\x85", "tight-trifoliate-snowflake"},  // U+2745
    {"\xe2\x9d\x86", "heavy-chevron-snowflake"},  // U+2746
    {"\xe2\x9d\x87", "sparkle"},  // U+2747
    {"\xe2\x9d\x88", "heavy-sparkle"},  // U+2748
    {"\xe2\x9d\x89", "balloon-spoked-asterisk"},  // U+2749
    {"\xe2\x9d\x8a", "eight-teardrop-spoked-propeller-asterisk"},  // U+274A
    {"\xe2\x9d\x8b", "heavy-eight-teardrop-spoked-propeller-asterisk"},  // U+274B
    {"\xe2\x9d\x8c", "cross-mark"},  // U+274C
    {"\xe2\x9d\x8d", "shadowed-white-circle"},  // U+274D
    {"\xe2\x9d\x8e", "negative-squared-cross-mark"},  // U+274E
    {"\xe2\x9d\x8f", "lower-right-drop-shadowed-white-square"},  // U+274F
    {"\xe2\x9d\x90", "upper-right-drop-shadowed-white-square"},  // U+2750
    {"\xe2\x9d\x91", "lower-right-shadowed-white-square"},  // U+2751
    {"\xe2\x9d\x92", "upper-right-shadowed-white-square"},  // U+2752
    {"\xe2\x9d\x93", "black-question-mark-ornament"},  // U+2753
    {"\xe2\x9d\x94", "white-question-mark-ornament"},  // U+2754
    {"\xe2\x9d\x95", "white-exclamation-mark-ornament"},  // U+2755
    {"\xe2\x9d\x96", "black-diamond-minus-white-x"},  // U+2756
    {"\xe2\x9d\x97", "heavy-exclamation-mark"},  // U+2757
    {"\xe2\x9d\x98", "light-vertical-bar"},  // U+2758
    {"\xe2\x9d\x99", "medium-vertical-bar"},  // U+2759
    {"\xe2\x9d\x9a", "heavy-vertical-bar"},  // U+275A
    {"\xe2\x9d\x9b", "heavy-single-turned-comma-quotation-mark-ornament"},  // U+275B
    {"\xe2\x9d\x9c", "heavy-single-comma-quotation-mark-ornament"},  // U+275C
    {"\xe2\x9d\x9d", "heavy-double-turned-comma-quotation-mark-ornament"},  // U+275D
    {"\xe2\x9d\x9e", "heavy-double-comma-quotation-mark-ornament"},  // U+275E
    {"\xe2\x9d\x9f", "heavy-low-single-comma-quotation-mark-ornament"},  // U+275F
    {"\xe2\x9d\xa0", "heavy-low-double-comma-quotation-mark-ornament"},  // U+2760
    {"\xe2\x9d\xa1", "curved-stem-paragraph-sign-ornament"},  // U+2761
    {"\xe2\x9d\xa2", "heavy-exclamation-mark-ornament"},  // U+2762
    {"\xe2\x9d\xa3", "heavy-heart-exclamation-mark-ornament"},  // U+2763
    {"\xe2\x9d\xa4", "heavy-black-heart"},  // U+2764
    {"\xe2\x9d\xa5", "rotated-heavy-black-heart-bullet"},  // U+2765
    {"\xe2\x9d\xa6", "floral-heart"},  // U+2766
    {"\xe2\x9d\xa7", "rotated-floral-heart-bullet"},  // U+2767
    {"\xe2\x9d\xa8", "medium-left-parenthesis-ornament"},  // U+2768
    {"\xe2\x9d\xa9", "medium-right-parenthesis-ornament"},  // U+2769
    {"\xe2\x9d\xaa", "medium-flattened-left-parenthesis-ornament"},  // U+276A
    {"\xe2\x9d\xab", "medium-flattened-right-parenthesis-ornament"},  // U+276B
    {"\xe2\x9d\xac", "medium-left-pointing-angle-bracket-ornament"},  // U+276C
    {"\xe2\x9d\xad", "medium-right-pointing-angle-bracket-ornament"},  // U+276D
    {"\xe2\x9d\xae", "heavy-left-pointing-angle-quotation-mark-ornament"},  // U+276E
    {"\xe2\x9d\xaf", "heavy-right-pointing-angle-quotation-mark-ornament"},  // U+276F
    {"\xe2\x9d\xb0", "heavy-left-pointing-angle-bracket-ornament"},  // U+2770
    {"\xe2\x9d\xb1", "heavy-right-pointing-angle-bracket-ornament"},  // U+2771
    {"\xe2\x9d\xb2", "light-left-tortoise-shell-bracket-ornament"},  // U+2772
    {"\xe2\x9d\xb3", "light-right-tortoise-shell-bracket-ornament"},  // U+2773
    {"\xe2\x9d\xb4", "medium-left-curly-bracket-ornament"},  // U+2774
    {"\xe2\x9d\xb5", "medium-right-curly-bracket-ornament"},  // U+2775
    {"\xe2\x9d\xb6", "dingbat-negative-circled-digit-one"},  // U+2776
    {"\xe2\x9d\xb7", "dingbat-negative-circled-digit-two"},  // U+2777
    {"\xe2\x9d\xb8", "dingbat-negative-circled-digit-three"},  // U+2778
    {"\xe2\x9d\xb9", "dingbat-negative-circled-digit-four"},  // U+2779
    {"\xe2\x9d\xba", "dingbat-negative-circled-digit-five"},  // U+277A
    {"\xe2\x9d\xbb", "dingbat-negative-circled-digit-six"},  // U+277B
    {"\xe2\x9d\xbc", "dingbat-negative-circled-digit-seven"},  // U+277C
    {"\xe2\x9d\xbd", "dingbat-negative-circled-digit-eight"},  // U+277D
    {"\xe2\x9d\xbe", "dingbat-negative-circled-digit-nine"},  // U+277E
    {"\xe2\x9d\xbf", "dingbat-negative-circled-number-ten"},  // U+277F
    {"\xe2\x9e\x80", "dingbat-circled-sans-serif-digit-one"},  // U+2780
    {"\xe2\x9e\x81", "dingbat-circled-sans-serif-digit-two"},  // U+2781
    {"\xe2\x9e\x82", "dingbat-circled-sans-serif-digit-three"},  // U+2782
    {"\xe2\x9e\x83", "dingbat-circled-sans-serif-digit-four"},  // U+2783
    {"\xe2\x9e\x84", "dingbat-circled-sans-serif-digit-five"},  // U+2784
    {"\xe2\x9e\x85", "dingbat-circled-sans-serif-digit-six"},  // U+2785
    {"\xe2\x9e\x86", "dingbat-circled-sans-serif-digit-seven"},  // U+2786
    {"\xe2\x9e\x87", "dingbat-circled-sans-serif-digit-eight"},  // U+2787
    {"\xe2\x9e\x88", "dingbat-circled-sans-serif-digit-nine"},  // U+2788
    {"\xe2\x9e\x89", "dingbat-circled-sans-serif-number-ten"},  // U+2789
    {"\xe2\x9e\x8a", "dingbat-negative-circled-sans-serif-digit-one"},  // U+278A
    {"\xe2\x9e\x8b", "dingbat-negative-circled-sans-serif-digit-two"},  // U+278B
    {"\xe2\x9e\x8c", "dingbat-negative-circled-sans-serif-digit-three"},  // U+278C
    {"\xe2\x9e\x8d", "dingbat-negative-circled-sans-serif-digit-four"},  // U+278D
    {"\xe2\x9e\x8e", "dingbat-negative-circled-sans-serif-digit-five"},  // U+278E
    {"\xe2\x9e\x8f", "dingbat-negative-circled-sans-serif-digit-six"},  // U+278F
    {"\xe2\x9e\x90", "dingbat-negative-circled-sans-serif-digit-seven"},  // U+2790
    {"\xe2\x9e\x91", "dingbat-negative-circled-sans-serif-digit-eight"},  // U+2791
    {"\xe2\x9e\x92", "dingbat-negative-circled-sans-serif-digit-nine"},  // U+2792
    {"\xe2\x9e\x93", "dingbat-negative-circled-sans-serif-number-ten"},  // U+2793
    {"\xe2\x9e\x94", "heavy-wide-headed-rightwards-arrow"},  // U+2794
    {"\xe2\x9e\x95", "heavy-plus-sign"},  // U+2795
    {"\xe2\x9e\x96", "heavy-minus-sign"},  // U+2796
    {"\xe2\x9e\x97", "heavy-division-sign"},  // U+2797
    {"\xe2\x9e\x98", "heavy-south-east-arrow"},  // U+2798
    {"\xe2\x9e\x99", "heavy-rightwards-arrow"},  // U+2799
    {"\xe2\x9e\x9a", "heavy-north-east-arrow"},  // U+279A
    {"\xe2\x9e\x9b", "drafting-point-rightwards-arrow"},  // U+279B
    {"\xe2\x9e\x9c", "heavy-round-tipped-rightwards-arrow"},  // U+279C
    {"\xe2\x9e\x9d", "triangle-headed-rightwards-arrow"},  // U+279D
    {"\xe2\x9e\x9e", "heavy-triangle-headed-rightwards-arrow"},  // U+279E
    {"\xe2\x9e\x9f", "dashed-triangle-headed-rightwards-arrow"},  // U+279F
    {"\xe2\x9e\xa0", "heavy-dashed-triangle-headed-rightwards-arrow"},  // U+27A0
    {"\xe2\x9e\xa1", "black-rightwards-arrow"},  // U+27A1
    {"\xe2\x9e\xa2", "three-d-top-lighted-rightwards-arrowhead"},  // U+27A2
    {"\xe2\x9e\xa3", "three-d-bottom-lighted-rightwards-arrowhead"},  // U+27A3
    {"\xe2\x9e\xa4", "black-rightwards-arrowhead"},  // U+27A4
    {"\xe2\x9e\xa5", "heavy-black-curved-downwards-and-rightwards-arrow"},  // U+27A5
    {"\xe2\x9e\xa6", "heavy-black-curved-upwards-and-rightwards-arrow"},  // U+27A6
    {"\xe2\x9e\xa7", "squat-black-rightwards-arrow"},  // U+27A7
    {"\xe2\x9e\xa8", "heavy-concave-pointed-black-rightwards-arrow"},  // U+27A8
    {"\xe2\x9e\xa9", "right-shaded-white-rightwards-arrow"},  // U+27A9
    {"\xe2\x9e\xaa", "left-shaded-white-rightwards-arrow"},  // U+27AA
    {"\xe2\x9e\xab", "back-tilted-shadowed-white-rightwards-arrow"},  // U+27AB
    {"\xe2\x9e\xac", "front-tilted-shadowed-white-rightwards-arrow"},  // U+27AC
    {"\xe2\x9e\xad", "heavy-lower-right-shadowed-white-rightwards-arrow"},  // U+27AD
    {"\xe2\x9e\xae", "heavy-upper-right-shadowed-white-rightwards-arrow"},  // U+27AE
    {"\xe2\x9e\xaf", "notched-lower-right-shadowed-white-rightwards-arrow"},  // U+27AF
    {"\xe2\x9e\xb0", "curly-loop"},  // U+27B0
    {"\xe2\x9e\xb1", "notched-upper-right-shadowed-white-rightwards-arrow"},  // U+27B1
    {"\xe2\x9e\xb2", "circled-heavy-white-rightwards-arrow"},  // U+27B2
    {"\xe2\x9e\xb3", "white-feathered-rightwards-arrow"},  // U+27B3
    {"\xe2\x9e\xb4", "black-feathered-south-east-arrow"},  // U+27B4
    {"\xe2\x9e\xb5", "black-feathered-rightwards-arrow"},  // U+27B5
    {"\xe2\x9e\xb6", "black-feathered-north-east-arrow"},  // U+27B6
    {"\xe2\x9e\xb7", "heavy-black-feathered-south-east-arrow"},  // U+27B7
    {"\xe2\x9e\xb8", "heavy-black-feathered-rightwards-arrow"},  // U+27B8
    {"\xe2\x9e\xb9", "heavy-black-feathered-north-east-arrow"},  // U+27B9
    {"\xe2\x9e\xba", "teardrop-barbed-rightwards-arrow"},  // U+27BA
    {"\xe2\x9e\xbb", "heavy-teardrop-shanked-rightwards-arrow"},  // U+27BB
    {"\xe2\x9e\xbc", "wedge-tailed-rightwards-arrow"},  // U+27BC
    {"\xe2\x9e\xbd", "heavy-wedge-tailed-rightwards-arrow"},  // U+27BD
    {"\xe2\x9e\xbe", "open-outlined-rightwards-arrow"},  // U+27BE
    {"\xe2\x9e\xbf", "double-curly-loop"},  // U+27BF
    {"\xe2\xac\x80", "north-east-white-arrow"},  // U+2B00
    {"\xe2\xac\x81", "north-west-white-arrow"},  // U+2B01
    {"\xe2\xac\x82", "south-east-white-arrow"},  // U+2B02
    {"\xe2\xac\x83", "south-west-white-arrow"},  // U+2B03
    {"\xe2\xac\x84", "left-right-white-arrow"},  // U+2B04
    {"\xe2\xac\x85", "leftwards-black-arrow"},  // U+2B05
    {"\xe2\xac\x86", "upwards-black-arrow"},  // U+2B06
    {"\xe2\xac\x87", "downwards-black-arrow"},  // U+2B07
    {"\xe2\xac\x88", "north-east-black-arrow"},  // U+2B08
    {"\xe2\xac\x89", "north-west-black-arrow"},  // U+2B09
    {"\xe2\xac\x8a", "south-east-black-arrow"},  // U+2B0A
    {"\xe2\xac\x8b", "south-west-black-arrow"},  // U+2B0B
    {"\xe2\xac\x8c", "left-right-black-arrow"},  // U+2B0C
    {"\xe2\xac\x8d", "up-down-black-arrow"},  // U+2B0D
    {"\xe2\xac\x8e", "rightwards-arrow-with-tip-downwards"},  // U+2B0E
    {"\xe2\xac\x8f", "rightwards-arrow-with-tip-upwards"},  // U+2B0F
    {"\xe2\xac\x90", "leftwards-arrow-with-tip-downwards"},  // U+2B10
    {"\xe2\xac\x91", "leftwards-arrow-with-tip-upwards"},  // U+2B11
    {"\xe2\xac\x92", "square-with-top-half-black"},  // U+2B12
    {"\xe2\xac\x93", "square-with-bottom-half-black"},  // U+2B13
    {"\xe2\xac\x94", "square-with-upper-right-diagonal-half-black"},  // U+2B14
    {"\xe2\xac\x95", "square-with-lower-left-diagonal-half-black"},  // U+2B15
    {"\xe2\xac\x96", "diamond-with-left-half-black"},  // U+2B16
    {"\xe2\xac\x97", "diamond-with-right-half-black"},  // U+2B17
    {"\xe2\xac\x98", "diamond-with-top-half-black"},  // U+2B18
    {"\xe2\xac\x99", "diamond-with-bottom-half-black"},  // U+2B19
    {"\xe2\xac\x9a", "dotted-square"},  // U+2B1A
    {"\xe2\xac\x9b", "black-large-square"},  // U+2B1B
    {"\xe2\xac\x9c", "white-large-square"},  // U+2B1C
    {"\xe2\xac\x9d", "black-very-small-square"},  // U+2B1D
    {"\xe2\xac\x9e", "white-very-small-square"},  // U+2B1E
    {"\xe2\xac\x9f", "black-pentagon"},  // U+2B1F
    {"\xe2\xac\xa0", "white-pentagon"},  // U+2B20
    {"\xe2\xac\xa1", "white-hexagon"},  // U+2B21
    {"\xe2\xac\xa2", "black-hexagon"},  // U+2B22
    {"\xe2\xac\xa3", "horizontal-black-hexagon"},  // U+2B23
    {"\xe2\xac\xa4", "black-large-circle"},  // U+2B24
    {"\xe2\xac\xa5", "black-medium-diamond"},  // U+2B25
    {"\xe2\xac\xa6", "white-medium-diamond"},  // U+2B26
    {"\xe2\xac\xa7", "black-medium-lozenge"},  // U+2B27
    {"\xe2\xac\xa8", "white-medium-lozenge"},  // U+2B28
    {"\xe2\xac\xa9", "black-small-diamond"},  // U+2B29
    {"\xe2\xac\xaa", "black-small-lozenge"},  // U+2B2A
    {"\xe2\xac\xab", "white-small-lozenge"},  // U+2B2B
    {"\xe2\xac\xac", "black-horizontal-ellipse"},  // U+2B2C
    {"\xe2\xac\xad", "white-horizontal-ellipse"},  // U+2B2D
    {"\xe2\xac\xae", "black-vertical-ellipse"},  // U+2B2E
    {"\xe2\xac\xaf", "white-vertical-ellipse"},  // U+2B2F
    {"\xe2\xac\xb0", "left-arrow-with-small-circle"},  // U+2B30
    {"\xe2\xac\xb1", "three-leftwards-arrows"},  // U+2B31
    {"\xe2\xac\xb2", "left-arrow-with-circled-plus"},  // U+2B32
    {"\xe2\xac\xb3", "long-leftwards-squiggle-arrow"},  // U+2B33
    {"\xe2\xac\xb4", "leftwards-two-headed-arrow-with-vertical-stroke"},  // U+2B34
    {"\xe2\xac\xb5", "leftwards-two-headed-arrow-with-double-vertical-stroke"},  // U+2B35
    {"\xe2\xac\xb6", "leftwards-two-headed-arrow-from-bar"},  // U+2B36
    {"\xe2\xac\xb7", "leftwards-two-headed-triple-dash-arrow"},  // U+2B37
    {"\xe2\xac\xb8", "leftwards-arrow-with-dotted-stem"},  // U+2B38
    {"\xe2\xac\xb9", "leftwards-arrow-with-tail-with-vertical-stroke"},  // U+2B39
    {"\xe2\xac\xba", "leftwards-arrow-with-tail-with-double-vertical-stroke"},  // U+2B3A
    {"\xe2\xac\xbb", "leftwards-two-headed-arrow-with-tail"},  // U+2B3B
    {"\xe2\xac\xbc", "leftwards-two-headed-arrow-with-tail-with-vertical-stroke"},  // U+2B3C
    {"\xe2\xac\xbd", "leftwards-two-headed-arrow-with-tail-with-double-vertical-stroke"},  // U+2B3D
    {"\xe2\xac\xbe", "leftwards-arrow-through-x"},  // U+2B3E
    {"\xe2\xac\xbf", "wave-arrow-pointing-directly-left"},  // U+2B3F
    {"\xe2\xad\x80", "equals-sign-above-leftwards-arrow"},  // U+2B40
    {"\xe2\xad\x81", "reverse-tilde-operator-above-leftwards-arrow"},  // U+2B41
    {"\xe2\xad\x82", "leftwards-arrow-above-reverse-almost-equal-to"},  // U+2B42
    {"\xe2\xad\x83", "rightwards-arrow-through-greater-than"},  // U+2B43
    {"\xe2\xad\x84", "rightwards-arrow-through-superset"},  // U+2B44
    {"\xe2\xad\x85", "leftwards-quadruple-arrow"},  // U+2B45
    {"\xe2\xad\x86", "rightwards-quadruple-arrow"},  // U+2B46
    {"\xe2\xad\x87", "reverse-tilde-operator-above-rightwards-arrow"},  // U+2B47
    {"\xe2\xad\x88", "rightwards-arrow-above-reverse-almost-equal-to"},  // U+2B48
    {"\xe2\xad\x89", "tilde-operator-above-leftwards-arrow"},  // U+2B49
    {"\xe2\xad\x8a", "leftwards-arrow-above-almost-equal-to"},  // U+2B4A
    {"\xe2\xad\x8b", "leftwards-arrow-above-reverse-tilde-operator"},  // U+2B4B
    {"\xe2\xad\x8c", "rightwards-arrow-above-reverse-tilde-operator"},  // U+2B4C
    {"\xe2\xad\x8d", "downwards-triangle-headed-zigzag-arrow"},  // U+2B4D
    {"\xe2\xad\x8e", "short-slanted-north-arrow"},  // U+2B4E
    {"\xe2\xad\x8f", "short-backslanted-south-arrow"},  // U+2B4F
    {"\xe2\xad\x90", "white-medium-star"},  // U+2B50
    {"\xe2\xad\x91", "black-small-star"},  // U+2B51
    {"\xe2\xad\x92", "white-small-star"},  // U+2B52
    {"\xe2\xad\x93", "black-right-pointing-pentagon"},  // U+2B53
    {"\xe2\xad\x94", "white-right-pointing-pentagon"},  // U+2B54
    {"\xe2\xad\x95", "heavy-large-circle"},  // U+2B55
    {"\xe2\xad\x96", "heavy-oval-with-oval-inside"},  // U+2B56
    {"\xe2\xad\x97", "heavy-circle-with-circle-inside"},  // U+2B57
    {"\xe2\xad\x98", "heavy-circle"},  // U+2B58
    {"\xe2\xad\x99", "heavy-circled-saltire"},  // U+2B59
    {"\xe2\xad\x9a", "slanted-north-arrow-with-hooked-head"},  // U+2B5A
    {"\xe2\xad\x9b", "backslanted-south-arrow-with-hooked-tail"},  // U+2B5B
    {"\xe2\xad\x9c", "slanted-north-arrow-with-horizontal-tail"},  // U+2B5C
    {"\xe2\xad\x9d", "backslanted-south-arrow-with-horizontal-tail"},  // U+2B5D
    {"\xe2\xad\x9e", "bent-arrow-pointing-downwards-then-north-east"},  // U+2B5E
    {"\xe2\xad\x9f", "short-bent-arrow-pointing-downwards-then-north-east"},  // U+2B5F
    {"\xe2\xad\xa0", "leftwards-triangle-headed-arrow"},  // U+2B60
    {"\xe2\xad\xa1", "upwards-triangle-headed-arrow"},  // U+2B61
    {"\xe2\xad\xa2", "rightwards-triangle-headed-arrow"},  // U+2B62
    {"\xe2\xad\xa3", "downwards-triangle-headed-arrow"},  // U+2B63
    {"\xe2\xad\xa4", "left-right-triangle-headed-arrow"},  // U+2B64
    {"\xe2\xad\xa5", "up-down-triangle-headed-arrow"},  // U+2B65
    {"\xe2\xad\xa6", "north-west-triangle-headed-arrow"},  // U+2B66
    {"\xe2\xad\xa7", "north-east-triangle-headed-arrow"},  // U+2B67
    {"\xe2\xad\xa8", "south-east-triangle-headed-arrow"},  // U+2B68
    {"\xe2\xad\xa9", "south-west-triangle-headed-arrow"},  // U+2B69
    {"\xe2\xad\xaa", "leftwards-triangle-headed-dashed-arrow"},  // U+2B6A
    {"\xe2\xad\xab", "upwards-triangle-headed-dashed-arrow"},  // U+2B6B
    {"\xe2\xad\xac", "rightwards-triangle-headed-dashed-arrow"},  // U+2B6C
    {"\xe2\xad\xad", "downwards-triangle-headed-dashed-arrow"},  // U+2B6D
    {"\xe2\xad\xae", "clockwise-triangle-headed-open-circle-arrow"},  // U+2B6E
    {"\xe2\xad\xaf", "anticlockwise-triangle-headed-open-circle-arrow"},  // U+2B6F
    {"\xe2\xad\xb0", "leftwards-triangle-headed-arrow-to-bar"},  // U+2B70
    {"\xe2\xad\xb1", "upwards-triangle-headed-arrow-to-bar"},  // U+2B71
    {"\xe2\xad\xb2", "rightwards-triangle-headed-arrow-to-bar"},  // U+2B72
    {"\xe2\xad\xb3", "downwards-triangle-headed-arrow-to-bar"},  // U+2B73
    {"\xe2\xad\xb6", "north-west-triangle-headed-arrow-to-bar"},  // U+2B76
    {"\xe2\xad\xb7", "north-east-triangle-headed-arrow-to-bar"},  // U+2B77
    {"\xe2\xad\xb8", "south-east-triangle-headed-arrow-to-bar"},  // U+2B78
    {"\xe2\xad\xb9", "south-west-triangle-headed-arrow-to-bar"},  // U+2B79
    {"\xe2\xad\xba", "leftwards-triangle-headed-arrow-with-double-horizontal-stroke"},  // U+2B7A
    {"\xe2\xad\xbb", "upwards-triangle-headed-arrow-with-double-horizontal-stroke"},  // U+2B7B
    {"\xe2\xad\xbc", "rightwards-triangle-headed-arrow-with-double-horizontal-stroke"},  // U+2B7C
    {"\xe2\xad\xbd", "downwards-triangle-headed-arrow-with-double-horizontal-stroke"},  // U+2B7D
    {"\xe2\xad\xbe", "horizontal-tab-key"},  // U+2B7E
    {"\xe2\xad\xbf", "vertical-tab-key"},  // U+2B7F
    {"\xe2\xae\x80", "leftwards-triangle-headed-arrow-over-rightwards-triangle-headed-arrow"},  // U+2B80
    {"\xe2\xae\x81", "upwards-triangle-headed-arrow-leftwards-of-downwards-triangle-headed-arrow"},  // U+2B81
    {"\xe2\xae\x82", "rightwards-triangle-headed-arrow-over-leftwards-triangle-headed-arrow"},  // U+2B82
    {"\xe2\xae\x83", "downwards-triangle-headed-arrow-leftwards-of-upwards-triangle-headed-arrow"},  // U+2B83
    {"\xe2\xae\x84", "leftwards-triangle-headed-paired-arrows"},  // U+2B84
    {"\xe2\xae\x85", "upwards-triangle-headed-paired-arrows"},  // U+2B85
    {"\xe2\xae\x86", "rightwards-triangle-headed-paired-arrows"},  // U+2B86
    {"\xe2\xae\x87", "downwards-triangle-headed-paired-arrows"},  // U+2B87
    {"\xe2\xae\x88", "leftwards-black-circled-white-arrow"},  // U+2B88
    {"\xe2\xae\x89", "upwards-black-circled-white-arrow"},  // U+2B89
    {"\xe2\xae\x8a", "rightwards-black-circled-white-arrow"},  // U+2B8A
    {"\xe2\xae\x8b", "downwards-black-circled-white-arrow"},  // U+2B8B
    {"\xe2\xae\x8c", "anticlockwise-triangle-headed-right-u-shaped-arrow"},  // U+2B8C
    {"\xe2\xae\x8d", "anticlockwise-triangle-headed-bottom-u-shaped-arrow"},  // U+2B8D
    {"\xe2\xae\x8e", "anticlockwise-triangle-headed-left-u-shaped-arrow"},  // U+2B8E
    {"\xe2\xae\x8f", "anticlockwise-triangle-headed-top-u-shaped-arrow"},  // U+2B8F
    {"\xe2\xae\x90", "return-left"},  // U+2B90
    {"\xe2\xae\x91", "return-right"},  // U+2B91
    {"\xe2\xae\x92", "newline-left"},  // U+2B92
    {"\xe2\xae\x93", "newline-right"},  // U+2B93
    {"\xe2\xae\x94", "four-corner-arrows-circling-anticlockwise"},  // U+2B94
    {"\xe2\xae\x95", "rightwards-black-arrow"},  // U+2B95
    {"\xe2\xae\x97", "symbol-for-type-a-electronics"},  // U+2B97
    {"\xe2\xae\x98", "three-d-top-lighted-leftwards-equilateral-arrowhead"},  // U+2B98
    {"\xe2\xae\x99", "three-d-right-lighted-upwards-equilateral-arrowhead"},  // U+2B99
    {"\xe2\xae\x9a", "three-d-top-lighted-rightwards-equilateral-arrowhead"},  // U+2B9A
    {"\xe2\xae\x9b", "three-d-left-lighted-downwards-equilateral-arrowhead"},  // U+2B9B
    {"\xe2\xae\x9c", "black-leftwards-equilateral-arrowhead"},  // U+2B9C
    {"\xe2\xae\x9d", "black-upwards-equilateral-arrowhead"},  // U+2B9D
    {"\xe2\xae\x9e", "black-rightwards-equilateral-arrowhead"},  // U+2B9E
    {"\xe2\xae\x9f", "black-downwards-equilateral-arrowhead"},  // U+2B9F
    {"\xe2\xae\xa0", "downwards-triangle-headed-arrow-with-long-tip-leftwards"},  // U+2BA0
    {"\xe2\xae\xa1", "downwards-triangle-headed-arrow-with-long-tip-rightwards"},  // U+2BA1
    {"\xe2\xae\xa2", "upwards-triangle-headed-arrow-with-long-tip-leftwards"},  // U+2BA2
    {"\xe2\xae\xa3", "upwards-triangle-headed-arrow-with-long-tip-rightwards"},  // U+2BA3
    {"\xe2\xae\xa4", "leftwards-triangle-headed-arrow-with-long-tip-upwards"},  // U+2BA4
    {"\xe2\xae\xa5", "rightwards-triangle-headed-arrow-with-long-tip-upwards"},  // U+2BA5
    {"\xe2\xae\xa6", "leftwards-triangle-headed-arrow-with-long-tip-downwards"},  // U+2BA6
    {"\xe2\xae\xa7", "rightwards-triangle-headed-arrow-with-long-tip-downwards"},  // U+2BA7
    {"\xe2\xae\xa8", "black-curved-downwards-and-leftwards-arrow"},  // U+2BA8
    {"\xe2\xae\xa9", "black-curved-downwards-and-rightwards-arrow"},  // U+2BA9
    {"\xe2\xae\xaa", "black-curved-upwards-and-leftwards-arrow"},  // U+2BAA
    {"\xe2\xae\xab", "black-curved-upwards-and-rightwards-arrow"},  // U+2BAB
    {"\xe2\xae\xac", "black-curved-leftwards-and-upwards-arrow"},  // U+2BAC
    {"\xe2\xae\xad", "black-curved-rightwards-and-upwards-arrow"},  // U+2BAD
    {"\xe2\xae\xae", "black-curved-leftwards-and-downwards-arrow"},  // U+2BAE
    {"\xe2\xae\xaf", "black-curved-rightwards-and-downwards-arrow"},  // U+2BAF
    {"\xe2\xae\xb0", "ribbon-arrow-down-left"},  // U+2BB0
    {"\xe2\xae\xb1", "ribbon-arrow-down-right"},  // U+2BB1
    {"\xe2\xae\xb2", "ribbon-arrow-up-left"},  // U+2BB2
    {"\xe2\xae\xb3", "ribbon-arrow-up-right"},  // U+2BB3
    {"\xe2\xae\xb4", "ribbon-arrow-left-up"},  // U+2BB4
    {"\xe2\xae\xb5", "ribbon-arrow-right-up"},  // U+2BB5
    {"\xe2\xae\xb6", "ribbon-arrow-left-down"},  // U+2BB6
    {"\xe2\xae\xb7", "ribbon-arrow-right-down"},  // U+2BB7
    {"\xe2\xae\xb8", "upwards-white-arrow-from-bar-with-horizontal-bar"},  // U+2BB8
    {"\xe2\xae\xb9", "up-arrowhead-in-a-rectangle-box"},  // U+2BB9
    {"\xe2\xae\xba", "overlapping-white-squares"},  // U+2BBA
    {"\xe2\xae\xbb", "overlapping-white-and-black-squares"},  // U+2BBB
    {"\xe2\xae\xbc", "overlapping-black-squares"},  // U+2BBC
    {"\xe2\xae\xbd", "ballot-box-with-light-x"},  // U+2BBD
    {"\xe2\xae\xbe", "circled-x"},  // U+2BBE
    {"\xe2\xae\xbf", "circled-bold-x"},  // U+2BBF
    {"\xe2\xaf\x80", "black-square-centred"},  // U+2BC0
    {"\xe2\xaf\x81", "black-diamond-centred"},  // U+2BC1
    {"\xe2\xaf\x82", "turned-black-pentagon"},  // U+2BC2
    {"\xe2\xaf\x83", "horizontal-black-octagon"},  // U+2BC3
    {"\xe2\xaf\x84", "black-octagon"},  // U+2BC4
    {"\xe2\xaf\x85", "black-medium-up-pointing-triangle-centred"},  // U+2BC5
    {"\xe2\xaf\x86", "black-medium-down-pointing-triangle-centred"},  // U+2BC6
    {"\xe2\xaf\x87", "black-medium-left-pointing-triangle-centred"},  // U+2BC7
    {"\xe2\xaf\x88", "black-medium-right-pointing-triangle-centred"},  // U+2BC8
    {"\xe2\xaf\x89", "neptune-form-two"},  // U+2BC9
    {"\xe2\xaf\x8a", "top-half-black-circle"},  // U+2BCA
    {"\xe2\xaf\x8b", "bottom-half-black-circle"},  // U+2BCB
    {"\xe2\xaf\x8c", "light-four-pointed-black-cusp"},  // U+2BCC
    {"\xe2\xaf\x8d", "rotated-light-four-pointed-black-cusp"},  // U+2BCD
    {"\xe2\xaf\x8e", "white-four-pointed-cusp"},  // U+2BCE
    {"\xe2\xaf\x8f", "rotated-white-four-pointed-cusp"},  // U+2BCF
    {"\xe2\xaf\x90", "square-position-indicator"},  // U+2BD0
    {"\xe2\xaf\x91", "uncertainty-sign"},  // U+2BD1
    {"\xe2\xaf\x92", "group-mark"},  // U+2BD2
    {"\xe2\xaf\x93", "pluto-form-two"},  // U+2BD3
    {"\xe2\xaf\x94", "pluto-form-three"},  // U+2BD4
    {"\xe2\xaf\x95", "pluto-form-four"},  // U+2BD5
    {"\xe2\xaf\x96", "pluto-form-five"},  // U+2BD6
    {"\xe2\xaf\x97", "transpluto"},  // U+2BD7
    {"\xe2\xaf\x98", "proserpina"},  // U+2BD8
    {"\xe2\xaf\x99", "astraea"},  // U+2BD9
    {"\xe2\xaf\x9a", "hygiea"},  // U+2BDA
    {"\xe2\xaf\x9b", "pholus"},  // U+2BDB
    {"\xe2\xaf\x9c", "nessus"},  // U+2BDC
    {"\xe2\xaf\x9d", "white-moon-selena"},  // U+2BDD
    {"\xe2\xaf\x9e", "black-diamond-on-cross"},  // U+2BDE
    {"\xe2\xaf\x9f", "true-light-moon-arta"},  // U+2BDF
    {"\xe2\xaf\xa0", "cupido"},  // U+2BE0
    {"\xe2\xaf\xa1", "hades"},  // U+2BE1
    {"\xe2\xaf\xa2", "zeus"},  // U+2BE2
    {"\xe2\xaf\xa3", "kronos"},  // U+2BE3
    {"\xe2\xaf\xa4", "apollon"},  // U+2BE4
    {"\xe2\xaf\xa5", "admetos"},  // U+2BE5
    {"\xe2\xaf\xa6", "vulcanus"},  // U+2BE6
    {"\xe2\xaf\xa7", "poseidon"},  // U+2BE7
    {"\xe2\xaf\xa8", "left-half-black-star"},  // U+2BE8
    {"\xe2\xaf\xa9", "right-half-black-star"},  // U+2BE9
    {"\xe2\xaf\xaa", "star-with-left-half-black"},  // U+2BEA
    {"\xe2\xaf\xab", "star-with-right-half-black"},  // U+2BEB
    {"\xe2\xaf\xac", "leftwards-two-headed-arrow-with-triangle-arrowheads"},  // U+2BEC
    {"\xe2\xaf\xad", "upwards-two-headed-arrow-with-triangle-arrowheads"},  // U+2BED
    {"\xe2\xaf\xae", "rightwards-two-headed-arrow-with-triangle-arrowheads"},  // U+2BEE
    {"\xe2\xaf\xaf", "downwards-two-headed-arrow-with-triangle-arrowheads"},  // U+2BEF
    {"\xe2\xaf\xb0", "eris-form-one"},  // U+2BF0
    {"\xe2\xaf\xb1", "eris-form-two"},  // U+2BF1
    {"\xe2\xaf\xb2", "sedna"},  // U+2BF2
    {"\xe2\xaf\xb3", "russian-astrological-symbol-vigintile"},  // U+2BF3
    {"\xe2\xaf\xb4", "russian-astrological-symbol-novile"},  // U+2BF4
    {"\xe2\xaf\xb5", "russian-astrological-symbol-quintile"},  // U+2BF5
    {"\xe2\xaf\xb6", "russian-astrological-symbol-binovile"},  // U+2BF6
    {"\xe2\xaf\xb7", "russian-astrological-symbol-sentagon"},  // U+2BF7
    {"\xe2\xaf\xb8", "russian-astrological-symbol-tredecile"},  // U+2BF8
    {"\xe2\xaf\xb9", "equals-sign-with-infinity-below"},  // U+2BF9
    {"\xe2\xaf\xba", "united"},  // U+2BFA
    {"\xe2\xaf\xbb", "separated"},  // U+2BFB
    {"\xe2\xaf\xbc", "doubled"},  // U+2BFC
    {"\xe2\xaf\xbd", "passed"},  // U+2BFD
    {"\xe2\xaf\xbe", "reversed-right-angle"},  // U+2BFE
    {"\xe2\xaf\xbf", "hellschreiber-pause"},  // U+2BFF
    {"\xf0\x9f\x8c\x80", "cyclone"},  // U+1F300
    {"\xf0\x9f\x8c\x81", "foggy"},  // U+1F301
    {"\xf0\x9f\x8c\x82", "closed-umbrella"},  // U+1F302
    {"\xf0\x9f\x8c\x83", "night-with-stars"},  // U+1F303
    {"\xf0\x9f\x8c\x84", "sunrise-over-mountains"},  // U+1F304
    {"\xf0\x9f\x8c\x85", "sunrise"},  // U+1F305
    {"\xf0\x9f\x8c\x86", "cityscape-at-dusk"},  // U+1F306
    {"\xf0\x9f\x8c\x87", "sunset-over-buildings"},  // U+1F307
    {"\xf0\x9f\x8c\x88", "rainbow"},  // U+1F308
    {"\xf0\x9f\x8c\x89", "bridge-at-night"},  // U+1F309
    {"\xf0\x9f\x8c\x8a", "water-wave"},  // U+1F30A
    {"\xf0\x9f\x8c\x8b", "volcano"},  // U+1F30B
    {"\xf0\x9f\x8c\x8c", "milky-way"},  // U+1F30C
    {"\xf0\x9f\x8c\x8d", "earth-globe-europe-africa"},  // U+1F30D
    {"\xf0\x9f\x8c\x8e", "earth-globe-americas"},  // U+1F30E
    {"\xf0\x9f\x8c\x8f", "earth-globe-asia-australia"},  // U+1F30F
    {"\xf0\x9f\x8c\x90", "globe-with-meridians"},  // U+1F310
    {"\xf0\x9f\x8c\x91", "new-moon"},  // U+1F311
    {"\xf0\x9f\x8c\x92", "waxing-crescent-moon"},  // U+1F312
    {"\xf0\x9f\x8c\x93", "first-quarter-moon"},  // U+1F313
    {"\xf0\x9f\x8c\x94", "waxing-gibbous-moon"},  // U+1F314
    {"\xf0\x9f\x8c\x95", "full-moon"},  // U+1F315
    {"\xf0\x9f\x8c\x96", "waning-gibbous-moon"},  // U+1F316
    {"\xf0\x9f\x8c\x97", "last-quarter-moon"},  // U+1F317
    {"\xf0\x9f\x8c\x98", "waning-crescent-moon"},  // U+1F318
    {"\xf0\x9f\x8c\x99", "crescent-moon"},  // U+1F319
    {"\xf0\x9f\x8c\x9a", "new-moon-with-face"},  // U+1F31A
    {"\xf0\x9f\x8c\x9b", "first-quarter-moon-with-face"},  // U+1F31B
    {"\xf0\x9f\x8c\x9c", "last-quarter-moon-with-face"},  // U+1F31C
    {"\xf0\x9f\x8c\x9d", "full-moon-with-face"},  // U+1F31D
    {"\xf0\x9f\x8c\x9e", "sun-with-face"},  // U+1F31E
    {"\xf0\x9f\x8c\x9f", "glowing-star"},  // U+1F31F
    {"\xf0\x9f\x8c\xa0", "shooting-star"},  // U+1F320
    {"\xf0\x9f\x8c\xa1", "thermometer"},  // U+1F321
    {"\xf0\x9f\x8c\xa2", "black-droplet"},  // U+1F322
    {"\xf0\x9f\x8c\xa3", "white-sun"},  // U+1F323
    {"\xf0\x9f\x8c\xa4", "white-sun-with-small-cloud"},  // U+1F324
    {"\xf0\x9f\x8c\xa5", "white-sun-behind-cloud"},  // U+1F325
    {"\xf0\x9f\x8c\xa6", "white-sun-behind-cloud-with-rain"},  // U+1F326
    {"\xf0\x9f\x8c\xa7", "cloud-with-rain"},  // U+1F327
    {"\xf0\x9f\x8c\xa8", "cloud-with-snow"},  // U+1F328
    {"\xf0\x9f\x8c\xa9", "cloud-with-lightning"},  // U+1F329
    {"\xf0\x9f\x8c\xaa", "cloud-with-tornado"},  // U+1F32A
    {"\xf0\x9f\x8c\xab", "fog"},  // U+1F32B
    {"\xf0\x9f\x8c\xac", "wind-blowing-face"},  // U+1F32C
    {"\xf0\x9f\x8c\xad", "hot-dog"},  // U+1F32D
    {"\xf0\x9f\x8c\xae", "taco"},  // U+1F32E
    {"\xf0\x9f\x8c\xaf", "burrito"},  // U+1F32F
    {"\xf0\x9f\x8c\xb0", "chestnut"},  // U+1F330
    {"\xf0\x9f\x8c\xb1", "seedling"},  // U+1F331
    {"\xf0\x9f\x8c\xb2", "evergreen-tree"},  // U+1F332
    {"\xf0\x9f\x8c\xb3", "deciduous-tree"},  // U+1F333
    {"\xf0\x9f\x8c\xb4", "palm-tree"},  // U+1F334
    {"\xf0\x9f\x8c\xb5", "cactus"},  // U+1F335
    {"\xf0\x9f\x8c\xb6", "hot-pepper"},  // U+1F336
    {"\xf0\x9f\x8c\xb7", "tulip"},  // U+1F337
    {"\xf0\x9f\x8c\xb8", "cherry-blossom"},  // U+1F338
    {"\xf0\x9f\x8c\xb9", "rose"},  // U+1F339
    {"\xf0\x9f\x8c\xba", "hibiscus"},  // U+1F33A
    {"\xf0\x9f\x8c\xbb", "sunflower"},  // U+1F33B
    {"\xf0\x9f\x8c\xbc", "blossom"},  // U+1F33C
    {"\xf0\x9f\x8c\xbd", "ear-of-maize"},  // U+1F33D
    {"\xf0\x9f\x8c\xbe", "ear-of-rice"},  // U+1F33E
    {"\xf0\x9f\x8c\xbf", "herb"},  // U+1F33F
    {"\xf0\x9f\x8d\x80", "four-leaf-clover"},  // U+1F340
    {"\xf0\x9f\x8d\x81", "maple-leaf"},  // U+1F341
    {"\xf0\x9f\x8d\x82", "fallen-leaf"},  // U+1F342
    {"\xf0\x9f\x8d\x83", "leaf-fluttering-in-wind"},  // U+1F343
    {"\xf0\x9f\x8d\x84", "mushroom"},  // U+1F344
    {"\xf0\x9f\x8d\x85", "tomato"},  // U+1F345
    {"\xf0\x9f\x8d\x86", "aubergine"},  // U+1F346
    {"\xf0\x9f\x8d\x87", "grapes"},  // U+1F347
    {"\xf0\x9f\x8d\x88", "melon"},  // U+1F348
    {"\xf0\x9f\x8d\x89", "watermelon"},  // U+1F349
    {"\xf0\x9f\x8d\x8a", "tangerine"},  // U+1F34A
    {"\xf0\x9f\x8d\x8b", "lemon"},  // U+1F34B
    {"\xf0\x9f\x8d\x8c", "banana"},  // U+1F34C
    {"\xf0\x9f\x8d\x8d", "pineapple"},  // U+1F34D
    {"\xf0\x9f\x8d\x8e", "red-apple"},  // U+1F34E
    {"\xf0\x9f\x8d\x8f", "green-apple"},  // U+1F34F
    {"\xf0\x9f\x8d\x90", "pear"},  // U+1F350
    {"\xf0\x9f\x8d\x91", "peach"},  // U+1F351
    {"\xf0\x9f\x8d\x92", "cherries"},  // U+1F352
    {"\xf0\x9f\x8d\x93", "strawberry"},  // U+1F353
    {"\xf0\x9f\x8d\x94", "hamburger"},  // U+1F354
    {"\xf0\x9f\x8d\x95", "slice-of-pizza"},  // U+1F355
    {"\xf0\x9f\x8d\x96", "meat-on-bone"},  // U+1F356
    {"\xf0\x9f\x8d\x97", "poultry-leg"},  // U+1F357
    {"\xf0\x9f\x8d\x98", "rice-cracker"},  // U+1F358
    {"\xf0\x9f\x8d\x99", "rice-ball"},  // U+1F359
    {"\xf0\x9f\x8d\x9a", "cooked-rice"},  // U+1F35A
    {"\xf0\x9f\x8d\x9b", "curry-and-rice"},  // U+1F35B
    {"\xf0\x9f\x8d\x9c", "steaming-bowl"},  // U+1F35C
    {"\xf0\x9f\x8d\x9d", "spaghetti"},  // U+1F35D
    {"\xf0\x9f\x8d\x9e", "bread"},  // U+1F35E
    {"\xf0\x9f\x8d\x9f", "french-fries"},  // U+1F35F
    {"\xf0\x9f\x8d\xa0", "roasted-sweet-potato"},  // U+1F360
    {"\xf0\x9f\x8d\xa1", "dango"},  // U+1F361
    {"\xf0\x9f\x8d\xa2", "oden"},  // U+1F362
    {"\xf0\x9f\x8d\xa3", "sushi"},  // U+1F363
    {"\xf0\x9f\x8d\xa4", "fried-shrimp"},  // U+1F364
    {"\xf0\x9f\x8d\xa5", "fish-cake-with-swirl-design"},  // U+1F365
    {"\xf0\x9f\x8d\xa6", "soft-ice-cream"},  // U+1F366
    {"\xf0\x9f\x8d\xa7", "shaved-ice"},  // U+1F367
    {"\xf0\x9f\x8d\xa8", "ice-cream"},  // U+1F368
    {"\xf0\x9f\x8d\xa9", "doughnut"},  // U+1F369
    {"\xf0\x9f\x8d\xaa", "cookie"},  // U+1F36A
    {"\xf0\x9f\x8d\xab", "chocolate-bar"},  // U+1F36B
    {"\xf0\x9f\x8d\xac", "candy"},  // U+1F36C
    {"\xf0\x9f\x8d\xad", "lollipop"},  // U+1F36D
    {"\xf0\x9f\x8d\xae", "custard"},  // U+1F36E
    {"\xf0\x9f\x8d\xaf", "honey-pot"},  // U+1F36F
    {"\xf0\x9f\x8d\xb0", "shortcake"},  // U+1F370
    {"\xf0\x9f\x8d\xb1", "bento-box"},  // U+1F371
    {"\xf0\x9f\x8d\xb2", "pot-of-food"},  // U+1F372
    {"\xf0\x9f\x8d\xb3", "cooking"},  // U+1F373
    {"\xf0\x9f\x8d\xb4", "fork-and-knife"},  // U+1F374
    {"\xf0\x9f\x8d\xb5", "teacup-without-handle"},  // U+1F375
    {"\xf0\x9f\x8d\xb6", "sake-bottle-and-cup"},  // U+1F376
    {"\xf0\x9f\x8d\xb7", "wine-glass"},  // U+1F377
    {"\xf0\x9f\x8d\xb8", "cocktail-glass"},  // U+1F378
    {"\xf0\x9f\x8d\xb9", "tropical-drink"},  // U+1F379
    {"\xf0\x9f\x8d\xba", "beer-mug"},  // U+1F37A
    {"\xf0\x9f\x8d\xbb", "clinking-beer-mugs"},  // U+1F37B
    {"\xf0\x9f\x8d\xbc", "baby-bottle"},  // U+1F37C
    {"\xf0\x9f\x8d\xbd", "fork-and-knife-with-plate"},  // U+1F37D
    {"\xf0\x9f\x8d\xbe", "bottle-with-popping-cork"},  // U+1F37E
    {"\xf0\x9f\x8d\xbf", "popcorn"},  // U+1F37F
    {"\xf0\x9f\x8e\x80", "ribbon"},  // U+1F380
    {"\xf0\x9f\x8e\x81", "wrapped-present"},  // U+1F381
    {"\xf0\x9f\x8e\x82", "birthday-cake"},  // U+1F382
    {"\xf0\x9f\x8e\x83", "jack-o-lantern"},  // U+1F383
    {"\xf0\x9f\x8e\x84", "christmas-tree"},  // U+1F384
    {"\xf0\x9f\x8e\x85", "father-christmas"},  // U+1F385
    {"\xf0\x9f\x8e\x86", "fireworks"},  // U+1F386
    {"\xf0\x9f\x8e\x87", "firework-sparkler"},  // U+1F387
    {"\xf0\x9f\x8e\x88", "balloon"},  // U+1F388
    {"\xf0\x9f\x8e\x89", "party-popper"},  // U+1F389
    {"\xf0\x9f\x8e\x8a", "confetti-ball"},  // U+1F38A
    {"\xf0\x9f\x8e\x8b", "tanabata-tree"},  // U+1F38B
    {"\xf0\x9f\x8e\x8c", "crossed-flags"},  // U+1F38C
    {"\xf0\x9f\x8e\x8d", "pine-decoration"},  // U+1F38D
    {"\xf0\x9f\x8e\x8e", "japanese-dolls"},  // U+1F38E
    {"\xf0\x9f\x8e\x8f", "carp-streamer"},  // U+1F38F
    {"\xf0\x9f\x8e\x90", "wind-chime"},  // U+1F390
    {"\xf0\x9f\x8e\x91", "moon-viewing-ceremony"},  // U+1F391
    {"\xf0\x9f\x8e\x92", "school-satchel"},  // U+1F392
    {"\xf0\x9f\x8e\x93", "graduation-cap"},  // U+1F393
    {"\xf0\x9f\x8e\x94", "heart-with-tip-on-the-left"},  // U+1F394
    {"\xf0\x9f\x8e\x95", "bouquet-of-flowers"},  // U+1F395
    {"\xf0\x9f\x8e\x96", "military-medal"},  // U+1F396
    {"\xf0\x9f\x8e\x97", "reminder-ribbon"},  // U+1F397
    {"\xf0\x9f\x8e\x98", "musical-keyboard-with-jacks"},  // U+1F398
    {"\xf0\x9f\x8e\x99", "studio-microphone"},  // U+1F399
    {"\xf0\x9f\x8e\x9a", "level-slider"},  // U+1F39A
    {"\xf0\x9f\x8e\x9b", "control-knobs"},  // U+1F39B
    {"\xf0\x9f\x8e\x9c", "beamed-ascending-musical-notes"},  // U+1F39C
    {"\xf0\x9f\x8e\x9d", "beamed-descending-musical-notes"},  // U+1F39D
    {"\xf0\x9f\x8e\x9e", "film-frames"},  // U+1F39E
    {"\xf0\x9f\x8e\x9f", "admission-tickets"},  // U+1F39F
    {"\xf0\x9f\x8e\xa0", "carousel-horse"},  // U+1F3A0
    {"\xf0\x9f\x8e\xa1", "ferris-wheel"},  // U+1F3A1
    {"\xf0\x9f\x8e\xa2", "roller-coaster"},  // U+1F3A2
    {"\xf0\x9f\x8e\xa3", "fishing-pole-and-fish"},  // U+1F3A3
    {"\xf0\x9f\x8e\xa4", "microphone"},  // U+1F3A4
    {"\xf0\x9f\x8e\xa5", "movie-camera"},  // U+1F3A5
    {"\xf0\x9f\x8e\xa6", "cinema"},  // U+1F3A6
    {"\xf0\x9f\x8e\xa7", "headphone"},  // U+1F3A7
    {"\xf0\x9f\x8e\xa8", "artist-palette"},  // U+1F3A8
    {"\xf0\x9f\x8e\xa9", "top-hat"},  // U+1F3A9
    {"\xf0\x9f\x8e\xaa", "circus-tent"},  // U+1F3AA
    {"\xf0\x9f\x8e\xab", "ticket"},  // U+1F3AB
    {"\xf0\x9f\x8e\xac", "clapper-board"},  // U+1F3AC
    {"\xf0\x9f\x8e\xad", "performing-arts"},  // U+1F3AD
    {"\xf0\x9f\x8e\xae", "video-game"},  // U+1F3AE
    {"\xf0\x9f\x8e\xaf", "direct-hit"},  // U+1F3AF
    {"\xf0\x9f\x8e\xb0", "slot-machine"},  // U+1F3B0
    {"\xf0\x9f\x8e\xb1", "billiards"},  // U+1F3B1
    {"\xf0\x9f\x8e\xb2", "game-die"},  // U+1F3B2
    {"\xf0\x9f\x8e\xb3", "bowling"},  // U+1F3B3
    {"\xf0\x9f\x8e\xb4", "flower-playing-cards"},  // U+1F3B4
    {"\xf0\x9f\x8e\xb5", "musical-note"},  // U+1F3B5
    {"\xf0\x9f\x8e\xb6", "multiple-musical-notes"},  // U+1F3B6
    {"\xf0\x9f\x8e\xb7", "saxophone"},  // U+1F3B7
    {"\xf0\x9f\x8e\xb8", "guitar"},  // U+1F3B8
    {"\xf0\x9f\x8e\xb9", "musical-keyboard"},  // U+1F3B9
    {"\xf0\x9f\x8e\xba", "trumpet"},  // U+1F3BA
    {"\xf0\x9f\x8e\xbb", "violin"},  // U+1F3BB
    {"\xf0\x9f\x8e\xbc", "musical-score"},  // U+1F3BC
    {"\xf0\x9f\x8e\xbd", "running-shirt-with-sash"},  // U+1F3BD
    {"\xf0\x9f\x8e\xbe", "tennis-racquet-and-ball"},  // U+1F3BE
    {"\xf0\x9f\x8e\xbf", "ski-and-ski-boot"},  // U+1F3BF
    {"\xf0\x9f\x8f\x80", "basketball-and-hoop"},  // U+1F3C0
    {"\xf0\x9f\x8f\x81", "chequered-flag"},  // U+1F3C1
    {"\xf0\x9f\x8f\x82", "snowboarder"},  // U+1F3C2
    {"\xf0\x9f\x8f\x83", "runner"},  // U+1F3C3
    {"\xf0\x9f\x8f\x84", "surfer"},  // U+1F3C4
    {"\xf0\x9f\x8f\x85", "sports-medal"},  // U+1F3C5
    {"\xf0\x9f\x8f\x86", "trophy"},  // U+1F3C6
    {"\xf0\x9f\x8f\x87", "horse-racing"},  // U+1F3C7
    {"\xf0\x9f\x8f\x88", "american-football"},  // U+1F3C8
    {"\xf0\x9f\x8f\x89", "rugby-football"},  // U+1F3C9
    {"\xf0\x9f\x8f\x8a", "swimmer"},  // U+1F3CA
    {"\xf0\x9f\x8f\x8b", "weight-lifter"},  // U+1F3CB
    {"\xf0\x9f\x8f\x8c", "golfer"},  // U+1F3CC
    {"\xf0\x9f\x8f\x8d", "racing-motorcycle"},  // U+1F3CD
    {"\xf0\x9f\x8f\x8e", "racing-car"},  // U+1F3CE
    {"\xf0\x9f\x8f\x8f", "cricket-bat-and-ball"},  // U+1F3CF
    {"\xf0\x9f\x8f\x90", "volleyball"},  // U+1F3D0
    {"\xf0\x9f\x8f\x91", "field-hockey-stick-and-ball"},  // U+1F3D1
    {"\xf0\x9f\x8f\x92", "ice-hockey-stick-and-puck"},  // U+1F3D2
    {"\xf0\x9f\x8f\x93", "table-tennis-paddle-and-ball"},  // U+1F3D3
    {"\xf0\x9f\x8f\x94", "snow-capped-mountain"},  // U+1F3D4
    {"\xf0\x9f\x8f\x95", "camping"},  // U+1F3D5
    {"\xf0\x9f\x8f\x96", "beach-with-umbrella"},  // U+1F3D6
    {"\xf0\x9f\x8f\x97", "building-construction"},  // U+1F3D7
    {"\xf0\x9f\x8f\x98", "house-buildings"},  // U+1F3D8
    {"\xf0\x9f\x8f\x99", "cityscape"},  // U+1F3D9
    {"\xf0\x9f\x8f\x9a", "derelict-house-building"},  // U+1F3DA
    {"\xf0\x9f\x8f\x9b", "classical-building"},  // U+1F3DB
    {"\xf0\x9f\x8f\x9c", "desert"},  // U+1F3DC
    {"\xf0\x9f\x8f\x9d", "desert-island"},  // U+1F3DD
    {"\xf0\x9f\x8f\x9e", "national-park"},  // U+1F3DE
    {"\xf0\x9f\x8f\x9f", "stadium"},  // U+1F3DF
    {"\xf0\x9f\x8f\xa0", "house-building"},  // U+1F3E0
    {"\xf0\x9f\x8f\xa1", "house-with-garden"},  // U+1F3E1
    {"\xf0\x9f\x8f\xa2", "office-building"},  // U+1F3E2
    {"\xf0\x9f\x8f\xa3", "japanese-post-office"},  // U+1F3E3
    {"\xf0\x9f\x8f\xa4", "european-post-office"},  // U+1F3E4
    {"\xf0\x9f\x8f\xa5", "hospital"},  // U+1F3E5
    {"\xf0\x9f\x8f\xa6", "bank"},  // U+1F3E6
    {"\xf0\x9f\x8f\xa7", "automated-teller-machine"},  // U+1F3E7
    {"\xf0\x9f\x8f\xa8", "hotel"},  // U+1F3E8
    {"\xf0\x9f\x8f\xa9", "love-hotel"},  // U+1F3E9
    {"\xf0\x9f\x8f\xaa", "convenience-store"},  // U+1F3EA
    {"\xf0\x9f\x8f\xab", "school"},  // U+1F3EB
    {"\xf0\x9f\x8f\xac", "department-store"},  // U+1F3EC
    {"\xf0\x9f\x8f\xad", "factory"},  // U+1F3ED
    {"\xf0\x9f\x8f\xae", "izakaya-lantern"},  // U+1F3EE
    {"\xf0\x9f\x8f\xaf", "japanese-castle"},  // U+1F3EF
    {"\xf0\x9f\x8f\xb0", "european-castle"},  // U+1F3F0
    {"\xf0\x9f\x8f\xb1", "white-pennant"},  // U+1F3F1
    {"\xf0\x9f\x8f\xb2", "black-pennant"},  // U+1F3F2
    {"\xf0\x9f\x8f\xb3", "waving-white-flag"},  // U+1F3F3
    {"\xf0\x9f\x8f\xb4", "waving-black-flag"},  // U+1F3F4
    {"\xf0\x9f\x8f\xb5", "rosette"},  // U+1F3F5
    {"\xf0\x9f\x8f\xb6", "black-rosette"},  // U+1F3F6
    {"\xf0\x9f\x8f\xb7", "label"},  // U+1F3F7
    {"\xf0\x9f\x8f\xb8", "badminton-racquet-and-shuttlecock"},  // U+1F3F8
    {"\xf0\x9f\x8f\xb9", "bow-and-arrow"},  // U+1F3F9
    {"\xf0\x9f\x8f\xba", "amphora"},  // U+1F3FA
    {"\xf0\x9f\x90\x80", "rat"},  // U+1F400
    {"\xf0\x9f\x90\x81", "mouse"},  // U+1F401
    {"\xf0\x9f\x90\x82", "ox"},  // U+1F402
    {"\xf0\x9f\x90\x83", "water-buffalo"},  // U+1F403
    {"\xf0\x9f\x90\x84", "cow"},  // U+1F404
    {"\xf0\x9f\x90\x85", "tiger"},  // U+1F405
    {"\xf0\x9f\x90\x86", "leopard"},  // U+1F406
    {"\xf0\x9f\x90\x87", "rabbit"},  // U+1F407
    {"\xf0\x9f\x90\x88", "cat"},  // U+1F408
    {"\xf0\x9f\x90\x89", "dragon"},  // U+1F409
    {"\xf0\x9f\x90\x8a", "crocodile"},  // U+1F40A
    {"\xf0\x9f\x90\x8b", "whale"},  // U+1F40B
    {"\xf0\x9f\x90\x8c", "snail"},  // U+1F40C
    {"\xf0\x9f\x90\x8d", "snake"},  // U+1F40D
    {"\xf0\x9f\x90\x8e", "horse"},  // U+1F40E
    {"\xf0\x9f\x90\x8f", "ram"},  // U+1F40F
    {"\xf0\x9f\x90\x90", "goat"},  // U+1F410
    {"\xf0\x9f\x90\x91", "sheep"},  // U+1F411
    {"\xf0\x9f\x90\x92", "monkey"},  // U+1F412
    {"\xf0\x9f\x90\x93", "rooster"},  // U+1F413
    {"\xf0\x9f\x90\x94", "chicken"},  // U+1F414
    {"\xf0\x9f\x90\x95", "dog"},  // U+1F415
    {"\xf0\x9f\x90\x96", "pig"},  // U+1F416
    {"\xf0\x9f\x90\x97", "boar"},  // U+1F417
    {"\xf0\x9f\x90\x98", "elephant"},  // U+1F418
    {"\xf0\x9f\x90\x99", "octopus"},  // U+1F419
    {"\xf0\x9f\x90\x9a", "spiral-shell"},  // U+1F41A
    {"\xf0\x9f\x90\x9b", "bug"},  // U+1F41B
    {"\xf0\x9f\x90\x9c", "ant"},  // U+1F41C
    {"\xf0\x9f\x90\x9d", "honeybee"},  // U+1F41D
    {"\xf0\x9f\x90\x9e", "lady-beetle"},  // U+1F41E
    {"\xf0\x9f\x90\x9f", "fish"},  // U+1F41F
    {"\xf0\x9f\x90\xa0", "tropical-fish"},  // U+1F420
    {"\xf0\x9f\x90\xa1", "blowfish"},  // U+1F421
    {"\xf0\x9f\x90\xa2", "turtle"},  // U+1F422
    {"\xf0\x9f\x90\xa3", "hatching-chick"},  // U+1F423
    {"\xf0\x9f\x90\xa4", "baby-chick"},  // U+1F424
    {"\xf0\x9f\x90\xa5", "front-facing-baby-chick"},  // U+1F425
    {"\xf0\x9f\x90\xa6", "bird"},  // U+1F426
    {"\xf0\x9f\x90\xa7", "penguin"},  // U+1F427
    {"\xf0\x9f\x90\xa8", "koala"},  // U+1F428
    {"\xf0\x9f\x90\xa9", "poodle"},  // U+1F429
    {"\xf0\x9f\x90\xaa", "dromedary-camel"},  // U+1F42A
    {"\xf0\x9f\x90\xab", "bactrian-camel"},  // U+1F42B
    {"\xf0\x9f\x90\xac", "dolphin"},  // U+1F42C
    {"\xf0\x9f\x90\xad", "mouse-face"},  // U+1F42D
    {"\xf0\x9f\x90\xae", "cow-face"},  // U+1F42E
    {"\xf0\x9f\x90\xaf", "tiger-face"},  // U+1F42F
    {"\xf0\x9f\x90\xb0", "rabbit-face"},  // U+1F430
    {"\xf0\x9f\x90\xb1", "cat-face"},  // U+1F431
    {"\xf0\x9f\x90\xb2", "dragon-face"},  // U+1F432
    {"\xf0\x9f\x90\xb3", "spouting-whale"},  // U+1F433
    {"\xf0\x9f\x90\xb4", "horse-face"},  // U+1F434
    {"\xf0\x9f\x90\xb5", "monkey-face"},  // U+1F435
    {"\xf0\x9f\x90\xb6", "dog-face"},  // U+1F436
    {"\xf0\x9f\x90\xb7", "pig-face"},  // U+1F437
    {"\xf0\x9f\x90\xb8", "frog-face"},  // U+1F438
    {"\xf0\x9f\x90\xb9", "hamster-face"},  // U+1F439
    {"\xf0\x9f\x90\xba", "wolf-face"},  // U+1F43A
    {"\xf0\x9f\x90\xbb", "bear-face"},  // U+1F43B
    {"\xf0\x9f\x90\xbc", "panda-face"},  // U+1F43C
    {"\xf0\x9f\x90\xbd", "pig-nose"},  // U+1F43D
    {"\xf0\x9f\x90\xbe", "paw-prints"},  // U+1F43E
    {"\xf0\x9f\x90\xbf", "chipmunk"},  // U+1F43F
    {"\xf0\x9f\x91\x80", "eyes"},  // U+1F440
    {"\xf0\x9f\x91\x81", "eye"},  // U+1F441
    {"\xf0\x9f\x91\x82", "ear"},  // U+1F442
    {"\xf0\x9f\x91\x83", "nose"},  // U+1F443
    {"\xf0\x9f\x91\x84", "mouth"},  // U+1F444
    {"\xf0\x9f\x91\x85", "tongue"},  // U+1F445
    {"\xf0\x9f\x91\x86", "white-up-pointing-backhand-index"},  // U+1F446
    {"\xf0\x9f\x91\x87", "white-down-pointing-backhand-index"},  // U+1F447
    {"\xf0\x9f\x91\x88", "white-left-pointing-backhand-index"},  // U+1F448
    {"\xf0\x9f\x91\x89", "white-right-pointing-backhand-index"},  // U+1F449
    {"\xf0\x9f\x91\x8a", "fisted-hand-sign"},  // U+1F44A
    {"\xf0\x9f\x91\x8b", "waving-hand-sign"},  // U+1F44B
    {"\xf0\x9f\x91\x8c", "ok-hand-sign"},  // U+1F44C
    {"\xf0\x9f\x91\x8d", "thumbs-up-sign"},  // U+1F44D
    {"\xf0\x9f\x91\x8e", "thumbs-down-sign"},  // U+1F44E
    {"\xf0\x9f\x91\x8f", "clapping-hands-sign"},  // U+1F44F
    {"\xf0\x9f\x91\x90", "open-hands-sign"},  // U+1F450
    {"\xf0\x9f\x91\x91", "crown"},  // U+1F451
    {"\xf0\x9f\x91\x92", "womans-hat"},  // U+1F452
    {"\xf0\x9f\x91\x93", "eyeglasses"},  // U+1F453
    {"\xf0\x9f\x91\x94", "necktie"},  // U+1F454
    {"\xf0\x9f\x91\x95", "t-shirt"},  // U+1F455
    {"\xf0\x9f\x91\x96", "jeans"},  // U+1F456
    {"\xf0\x9f\x91\x97", "dress"},  // U+1F457
    {"\xf0\x9f\x91\x98", "kimono"},  // U+1F458
    {"\xf0\x9f\x91\x99", "bikini"},  // U+1F459
    {"\xf0\x9f\x91\x9a", "womans-clothes"},  // U+1F45A
    {"\xf0\x9f\x91\x9b", "purse"},  // U+1F45B
    {"\xf0\x9f\x91\x9c", "handbag"},  // U+1F45C
    {"\xf0\x9f\x91\x9d", "pouch"},  // U+1F45D
    {"\xf0\x9f\x91\x9e", "mans-shoe"},  // U+1F45E
    {"\xf0\x9f\x91\x9f", "athletic-shoe"},  // U+1F45F
    {"\xf0\x9f\x91\xa0", "high-heeled-shoe"},  // U+1F460
    {"\xf0\x9f\x91\xa1", "womans-sandal"},  // U+1F461
    {"\xf0\x9f\x91\xa2", "womans-boots"},  // U+1F462
    {"\xf0\x9f\x91\xa3", "footprints"},  // U+1F463
    {"\xf0\x9f\x91\xa4", "bust-in-silhouette"},  // U+1F464
    {"\xf0\x9f\x91\xa5", "busts-in-silhouette"},  // U+1F465
    {"\xf0\x9f\x91\xa6", "boy"},  // U+1F466
    {"\xf0\x9f\x91\xa7", "girl"},  // U+1F467
    {"\xf0\x9f\x91\xa8", "man"},  // U+1F468
    {"\xf0\x9f\x91\xa9", "woman"},  // U+1F469
    {"\xf0\x9f\x91\xaa", "family"},  // U+1F46A
    {"\xf0\x9f\x91\xab", "man-and-woman-holding-hands"},  // U+1F46B
    {"\xf0\x9f\x91\xac", "two-men-holding-hands"},  // U+1F46C
    {"\xf0\x9f\x91\xad", "two-women-holding-hands"},  // U+1F46D
    {"\xf0\x9f\x91\xae", "police-officer"},  // U+1F46E
    {"\xf0\x9f\x91\xaf", "woman-with-bunny-ears"},  // U+1F46F
    {"\xf0\x9f\x91\xb0", "bride-with-veil"},  // U+1F470
    {"\xf0\x9f\x91\xb1", "person-with-blond-hair"},  // U+1F471
    {"\xf0\x9f\x91\xb2", "man-with-gua-pi-mao"},  // U+1F472
    {"\xf0\x9f\x91\xb3", "man-with-turban"},  // U+1F473
    {"\xf0\x9f\x91\xb4", "older-man"},  // U+1F474
    {"\xf0\x9f\x91\xb5", "older-woman"},  // U+1F475
    {"\xf0\x9f\x91\xb6", "baby"},  // U+1F476
    {"\xf0\x9f\x91\xb7", "construction-worker"},  // U+1F477
    {"\xf0\x9f\x91\xb8", "princess"},  // U+1F478
    {"\xf0\x9f\x91\xb9", "japanese-ogre"},  // U+1F479
    {"\xf0\x9f\x91\xba", "japanese-goblin"},  // U+1F47A
    {"\xf0\x9f\x91\xbb", "ghost"},  // U+1F47B
    {"\xf0\x9f\x91\xbc", "baby-angel"},  // U+1F47C
    {"\xf0\x9f\x91\xbd", "extraterrestrial-alien"},  // U+1F47D
    {"\xf0\x9f\x91\xbe", "alien-monster"},  // U+1F47E
    {"\xf0\x9f\x91\xbf", "imp"},  // U+1F47F
    {"\xf0\x9f\x92\x80", "skull"},  // U+1F480
    {"\xf0\x9f\x92\x81", "information-desk-person"},  // U+1F481
    {"\xf0\x9f\x92\x82", "guardsman"},  // U+1F482
    {"\xf0\x9f\x92\x83", "dancer"},  // U+1F483
    {"\xf0\x9f\x92\x84", "lipstick"},  // U+1F484
    {"\xf0\x9f\x92\x85", "nail-polish"},  // U+1F485
    {"\xf0\x9f\x92\x86", "face-massage"},  // U+1F486
    {"\xf0\x9f\x92\x87", "haircut"},  // U+1F487
    {"\xf0\x9f\x92\x88", "barber-pole"},  // U+1F488
    {"\xf0\x9f\x92\x89", "syringe"},  // U+1F489
    {"\xf0\x9f\x92\x8a", "pill"},  // U+1F48A
    {"\xf0\x9f\x92\x8b", "kiss-mark"},  // U+1F48B
    {"\xf0\x9f\x92\x8c", "love-letter"},  // U+1F48C
    {"\xf0\x9f\x92\x8d", "ring"},  // U+1F48D
    {"\xf0\x9f\x92\x8e", "gem-stone"},  // U+1F48E
    {"\xf0\x9f\x92\x8f", "kiss"},  // U+1F48F
    {"\xf0\x9f\x92\x90", "bouquet"},  // U+1F490
    {"\xf0\x9f\x92\x91", "couple-with-heart"},  // U+1F491
    {"\xf0\x9f\x92\x92", "wedding"},  // U+1F492
    {"\xf0\x9f\x92\x93", "beating-heart"},  // U+1F493
    {"\xf0\x9f\x92\x94", "broken-heart"},  // U+1F494
    {"\xf0\x9f\x92\x95", "two-hearts"},  // U+1F495
    {"\xf0\x9f\x92\x96", "sparkling-heart"},  // U+1F496
    {"\xf0\x9f\x92\x97", "growing-heart"},  // U+1F497
    {"\xf0\x9f\x92\x98", "heart-with-arrow"},  // U+1F498
    {"\xf0\x9f\x92\x99", "blue-heart"},  // U+1F499
    {"\xf0\x9f\x92\x9a", "green-heart"},  // U+1F49A
    {"\xf0\x9f\x92\x9b", "yellow-heart"},  // U+1F49B
    {"\xf0\x9f\x92\x9c", "purple-heart"},  // U+1F49C
    {"\xf0\x9f\x92\x9d", "heart-with-ribbon"},  // U+1F49D
    {"\xf0\x9f\x92\x9e", "revolving-hearts"},  // U+1F49E
    {"\xf0\x9f\x92\x9f", "heart-decoration"},  // U+1F49F
    {"\xf0\x9f\x92\xa0", "diamond-shape-with-a-dot-inside"},  // U+1F4A0
    {"\xf0\x9f\x92\xa1", "electric-light-bulb"},  // U+1F4A1
    {"\xf0\x9f\x92\xa2", "anger"},  // U+1F4A2
    {"\xf0\x9f\x92\xa3", "bomb"},  // U+1F4A3
    {"\xf0\x9f\x92\xa4", "sleeping"},  // U+1F4A4
    {"\xf0\x9f\x92\xa5", "collision"},  // U+1F4A5
    {"\xf0\x9f\x92\xa6", "splashing-sweat"},  // U+1F4A6
    {"\xf0\x9f\x92\xa7", "droplet"},  // U+1F4A7
    {"\xf0\x9f\x92\xa8", "dash"},  // U+1F4A8
    {"\xf0\x9f\x92\xa9", "pile-of-poo"},  // U+1F4A9
    {"\xf0\x9f\x92\xaa", "flexed-biceps"},  // U+1F4AA
    {"\xf0\x9f\x92\xab", "dizzy"},  // U+1F4AB
    {"\xf0\x9f\x92\xac", "speech-balloon"},  // U+1F4AC
    {"\xf0\x9f\x92\xad", "thought-balloon"},  // U+1F4AD
    {"\xf0\x9f\x92\xae", "white-flower"},  // U+1F4AE
    {"\xf0\x9f\x92\xaf", "hundred-points"},  // U+1F4AF
    {"\xf0\x9f\x92\xb0", "money-bag"},  // U+1F4B0
    {"\xf0\x9f\x92\xb1", "currency-exchange"},  // U+1F4B1
    {"\xf0\x9f\x92\xb2", "heavy-dollar-sign"},  // U+1F4B2
    {"\xf0\x9f\x92\xb3", "credit-card"},  // U+1F4B3
    {"\xf0\x9f\x92\xb4", "banknote-with-yen-sign"},  // U+1F4B4
    {"\xf0\x9f\x92\xb5", "banknote-with-dollar-sign"},  // U+1F4B5
    {"\xf0\x9f\x92\xb6", "banknote-with-euro-sign"},  // U+1F4B6
    {"\xf0\x9f\x92\xb7", "banknote-with-pound-sign"},  // U+1F4B7
    {"\xf0\x9f\x92\xb8", "money-with-wings"},  // U+1F4B8
    {"\xf0\x9f\x92\xb9", "chart-with-upwards-trend-and-yen-sign"},  // U+1F4B9
    {"\xf0\x9f\x92\xba", "seat"},  // U+1F4BA
    {"\xf0\x9f\x92\xbb", "personal-computer"},  // U+1F4BB
    {"\xf0\x9f\x92\xbc", "briefcase"},  // U+1F4BC
    {"\xf0\x9f\x92\xbd", "minidisc"},  // U+1F4BD
    {"\xf0\x9f\x92\xbe", "floppy-disk"},  // U+1F4BE
    {"\xf0\x9f\x92\xbf", "optical-disc"},  // U+1F4BF
    {"\xf0\x9f\x93\x80", "dvd"},  // U+1F4C0
    {"\xf0\x9f\x93\x81", "file-folder"},  // U+1F4C1
    {"\xf0\x9f\x93\x82", "open-file-folder"},  // U+1F4C2
    {"\xf0\x9f\x93\x83", "page-with-curl"},  // U+1F4C3
    {"\xf0\x9f\x93\x84", "page-facing-up"},  // U+1F4C4
    {"\xf0\x9f\x93\x85", "calendar"},  // U+1F4C5
    {"\xf0\x9f\x93\x86", "tear-off-calendar"},  // U+1F4C6
    {"\xf0\x9f\x93\x87", "card-index"},  // U+1F4C7
    {"\xf0\x9f\x93\x88", "chart-with-upwards-trend"},  // U+1F4C8
    {"\xf0\x9f\x93\x89", "chart-with-downwards-trend"},  // U+1F4C9
    {"\xf0\x9f\x93\x8a", "bar-chart"},  // U+1F4CA
    {"\xf0\x9f\x93\x8b", "clipboard"},  // U+1F4CB
    {"\xf0\x9f\x93\x8c", "pushpin"},  // U+1F4CC
    {"\xf0\x9f\x93\x8d", "round-pushpin"},  // U+1F4CD
    {"\xf0\x9f\x93\x8e", "paperclip"},  // U+1F4CE
    {"\xf0\x9f\x93\x8f", "straight-ruler"},  // U+1F4CF
    {"\xf0\x9f\x93\x90", "triangular-ruler"},  // U+1F4D0
    {"\xf0\x9f\x93\x91", "bookmark-tabs"},  // U+1F4D1
    {"\xf0\x9f\x93\x92", "ledger"},  // U+1F4D2
    {"\xf0\x9f\x93\x93", "notebook"},  // U+1F4D3
    {"\xf0\x9f\x93\x94", "notebook-with-decorative-cover"},  // U+1F4D4
    {"\xf0\x9f\x93\x95", "closed-book"},  // U+1F4D5
    {"\xf0\x9f\x93\x96", "open-book"},  // U+1F4D6
    {"\xf0\x9f\x93\x97", "green-book"},  // U+1F4D7
    {"\xf0\x9f\x93\x98", "blue-book"},  // U+1F4D8
    {"\xf0\x9f\x93\x99", "orange-book"},  // U+1F4D9
    {"\xf0\x9f\x93\x9a", "books"},  // U+1F4DA
    {"\xf0\x9f\x93\x9b", "name-badge"},  // U+1F4DB
    {"\xf0\x9f\x93\x9c", "scroll"},  // U+1F4DC
    {"\xf0\x9f\x93\x9d", "memo"},  // U+1F4DD
    {"\xf0\x9f\x93\x9e", "telephone-receiver"},  // U+1F4DE
    {"\xf0\x9f\x93\x9f", "pager"},  // U+1F4DF
    {"\xf0\x9f\x93\xa0", "fax-machine"},  // U+1F4E0
    {"\xf0\x9f\x93\xa1", "satellite-antenna"},  // U+1F4E1
    {"\xf0\x9f\x93\xa2", "public-address-loudspeaker"},  // U+1F4E2
    {"\xf0\x9f\x93\xa3", "cheering-megaphone"},  // U+1F4E3
    {"\xf0\x9f\x93\xa4", "outbox-tray"},  // U+1F4E4
    {"\xf0\x9f\x93\xa5", "inbox-tray"},  // U+1F4E5
    {"\xf0\x9f\x93\xa6", "package"},  // U+1F4E6
    {"\xf0\x9f\x93\xa7", "e-mail"},  // U+1F4E7
    {"\xf0\x9f\x93\xa8", "incoming-envelope"},  // U+1F4E8
    {"\xf0\x9f\x93\xa9", "envelope-with-downwards-arrow-above"},  // U+1F4E9
    {"\xf0\x9f\x93\xaa", "closed-mailbox-with-lowered-flag"},  // U+1F4EA
    {"\xf0\x9f\x93\xab", "closed-mailbox-with-raised-flag"},  // U+1F4EB
    {"\xf0\x9f\x93\xac", "open-mailbox-with-raised-flag"},  // U+1F4EC
    {"\xf0\x9f\x93\xad", "open-mailbox-with-lowered-flag"},  // U+1F4ED
    {"\xf0\x9f\x93\xae", "postbox"},  // U+1F4EE
    {"\xf0\x9f\x93\xaf", "postal-horn"},  // U+1F4EF
    {"\xf0\x9f\x93\xb0", "newspaper"},  // U+1F4F0
    {"\xf0\x9f\x93\xb1", "mobile-phone"},  // U+1F4F1
    {"\xf0\x9f\x93\xb2", "mobile-phone-with-rightwards-arrow-at-left"},  // U+1F4F2
    {"\xf0\x9f\x93\xb3", "vibration-mode"},  // U+1F4F3
    {"\xf0\x9f\x93\xb4", "mobile-phone-off"},  // U+1F4F4
    {"\xf0\x9f\x93\xb5", "no-mobile-phones"},  // U+1F4F5
    {"\xf0\x9f\x93\xb6", "antenna-with-bars"},  // U+1F4F6
    {"\xf0\x9f\x93\xb7", "camera"},  // U+1F4F7
    {"\xf0\x9f\x93\xb8", "camera-with-flash"},  // U+1F4F8
    {"\xf0\x9f\x93\xb9", "video-camera"},  // U+1F4F9
    {"\xf0\x9f\x93\xba", "television"},  // U+1F4FA
    {"\xf0\x9f\x93\xbb", "radio"},  // U+1F4FB
    {"\xf0\x9f\x93\xbc", "videocassette"},  // U+1F4FC
    {"\xf0\x9f\x93\xbd", "film-projector"},  // U+1F4FD
    {"\xf0\x9f\x93\xbe", "portable-stereo"},  // U+1F4FE
    {"\xf0\x9f\x93\xbf", "prayer-beads"},  // U+1F4FF
    {"\xf0\x9f\x94\x80", "twisted-rightwards-arrows"},  // U+1F500
    {"\xf0\x9f\x94\x81", "clockwise-rightwards-and-leftwards-open-circle-arrows"},  // U+1F501
    {"\xf0\x9f\x94\x82", "clockwise-rightwards-and-leftwards-open-circle-arrows-with-circled-one-overlay"},  // U+1F502
    {"\xf0\x9f\x94\x83", "clockwise-downwards-and-upwards-open-circle-arrows"},  // U+1F503
    {"\xf0\x9f\x94\x84", "anticlockwise-downwards-and-upwards-open-circle-arrows"},  // U+1F504
    {"\xf0\x9f\x94\x85", "low-brightness"},  // U+1F505
    {"\xf0\x9f\x94\x86", "high-brightness"},  // U+1F506
    {"\xf0\x9f\x94\x87", "speaker-with-cancellation-stroke"},  // U+1F507
    {"\xf0\x9f\x94\x88", "speaker"},  // U+1F508
    {"\xf0\x9f\x94\x89", "speaker-with-one-sound-wave"},  // U+1F509
    {"\xf0\x9f\x94\x8a", "speaker-with-three-sound-waves"},  // U+1F50A
    {"\xf0\x9f\x94\x8b", "battery"},  // U+1F50B
    {"\xf0\x9f\x94\x8c", "electric-plug"},  // U+1F50C
    {"\xf0\x9f\x94\x8d", "left-pointing-magnifying-glass"},  // U+1F50D
    {"\xf0\x9f\x94\x8e", "right-pointing-magnifying-glass"},  // U+1F50E
    {"\xf0\x9f\x94\x8f", "lock-with-ink-pen"},  // U+1F50F
    {"\xf0\x9f\x94\x90", "closed-lock-with-key"},  // U+1F510
    {"\xf0\x9f\x94\x91", "key"},  // U+1F511
    {"\xf0\x9f\x94\x92", "lock"},  // U+1F512
    {"\xf0\x9f\x94\x93", "open-lock"},  // U+1F513
    {"\xf0\x9f\x94\x94", "bell"},  // U+1F514
    {"\xf0\x9f\x94\x95", "bell-with-cancellation-stroke"},  // U+1F515
    {"\xf0\x9f\x94\x96", "bookmark"},  // U+1F516
    {"\xf0\x9f\x94\x97", "link"},  // U+1F517
    {"\xf0\x9f\x94\x98", "radio-button"},  // U+1F518
    {"\xf0\x9f\x94\x99", "back-with-leftwards-arrow-above"},  // U+1F519
    {"\xf0\x9f\x94\x9a", "end-with-leftwards-arrow-above"},  // U+1F51A
    {"\xf0\x9f\x94\x9b", "on-with-exclamation-mark-with-left-right-arrow-above"},  // U+1F51B
    {"\xf0\x9f\x94\x9c", "soon-with-rightwards-arrow-above"},  // U+1F51C
    {"\xf0\x9f\x94\x9d", "top-with-upwards-arrow-above"},  // U+1F51D
    {"\xf0\x9f\x94\x9e", "no-one-under-eighteen"},  // U+1F51E
    {"\xf0\x9f\x94\x9f", "keycap-ten"},  // U+1F51F
    {"\xf0\x9f\x94\xa0", "input-symbol-for-latin-capital-letters"},  // U+1F520
    {"\xf0\x9f\x94\xa1", "input-symbol-for-latin-small-letters"},  // U+1F521
    {"\xf0\x9f\x94\xa2", "input-symbol-for-numbers"},  // U+1F522
    {"\xf0\x9f\x94\xa3", "input-symbol-for-symbols"},  // U+1F523
    {"\xf0\x9f\x94\xa4", "input-symbol-for-latin-letters"},  // U+1F524
    {"\xf0\x9f\x94\xa5", "fire"},  // U+1F525
    {"\xf0\x9f\x94\xa6", "electric-torch"},  // U+1F526
    {"\xf0\x9f\x94\xa7", "wrench"},  // U+1F527
    {"\xf0\x9f\x94\xa8", "hammer"},  // U+1F528
    {"\xf0\x9f\x94\xa9", "nut-and-bolt"},  // U+1F529
    {"\xf0\x9f\x94\xaa", "hocho"},  // U+1F52A
    {"\xf0\x9f\x94\xab", "pistol"},  // U+1F52B
    {"\xf0\x9f\x94\xac", "microscope"},  // U+1F52C
    {"\xf0\x9f\x94\xad", "telescope"},  // U+1F52D
    {"\xf0\x9f\x94\xae", "crystal-ball"},  // U+1F52E
    {"\xf0\x9f\x94\xaf", "six-pointed-star-with-middle-dot"},  // U+1F52F
    {"\xf0\x9f\x94\xb0", "japanese-symbol-for-beginner"},  // U+1F530
    {"\xf0\x9f\x94\xb1", "trident-emblem"},  // U+1F531
    {"\xf0\x9f\x94\xb2", "black-square-button"},  // U+1F532
    {"\xf0\x9f\x94\xb3", "white-square-button"},  // U+1F533
    {"\xf0\x9f\x94\xb4", "large-red-circle"},  // U+1F534
    {"\xf0\x9f\x94\xb5", "large-blue-circle"},  // U+1F535
    {"\xf0\x9f\x94\xb6", "large-orange-diamond"},  // U+1F536
    {"\xf0\x9f\x94\xb7", "large-blue-diamond"},  // U+1F537
    {"\xf0\x9f\x94\xb8", "small-orange-diamond"},  // U+1F538
    {"\xf0\x9f\x94\xb9", "small-blue-diamond"},  // U+1F539
    {"\xf0\x9f\x94\xba", "up-pointing-red-triangle"},  // U+1F53A
    {"\xf0\x9f\x94\xbb", "down-pointing-red-triangle"},  // U+1F53B
    {"\xf0\x9f\x94\xbc", "up-pointing-small-red-triangle"},  // U+1F53C
    {"\xf0\x9f\x94\xbd", "down-pointing-small-red-triangle"},  // U+1F53D
    {"\xf0\x9f\x94\xbe", "lower-right-shadowed-white-circle"},  // U+1F53E
    {"\xf0\x9f\x94\xbf", "upper-right-shadowed-white-circle"},  // U+1F53F
    {"\xf0\x9f\x95\x80", "circled-cross-pommee"},  // U+1F540
    {"\xf0\x9f\x95\x81", "cross-pommee-with-half-circle-below"},  // U+1F541
    {"\xf0\x9f\x95\x82", "cross-pommee"},  // U+1F542
    {"\xf0\x9f\x95\x83", "notched-left-semicircle-with-three-dots"},  // U+1F543
    {"\xf0\x9f\x95\x84", "notched-right-semicircle-with-three-dots"},  // U+1F544
    {"\xf0\x9f\x95\x85", "symbol-for-marks-chapter"},  // U+1F545
    {"\xf0\x9f\x95\x86", "white-latin-cross"},  // U+1F546
    {"\xf0\x9f\x95\x87", "heavy-latin-cross"},  // U+1F547
    {"\xf0\x9f\x95\x88", "celtic-cross"},  // U+1F548
    {"\xf0\x9f\x95\x89", "om"},  // U+1F549
    {"\xf0\x9f\x95\x8a", "dove-of-peace"},  // U+1F54A
    {"\xf0\x9f\x95\x8b", "kaaba"},  // U+1F54B
    {"\xf0\x9f\x95\x8c", "mosque"},  // U+1F54C
    {"\xf0\x9f\x95\x8d", "synagogue"},  // U+1F54D
    {"\xf0\x9f\x95\x8e", "menorah-with-nine-branches"},  // U+1F54E
    {"\xf0\x9f\x95\x8f", "bowl-of-hygieia"},  // U+1F54F
    {"\xf0\x9f\x95\x90", "clock-face-one-oclock"},  // U+1F550
    {"\xf0\x9f\x95\x91", "clock-face-two-oclock"},  // U+1F551
    {"\xf0\x9f\x95\x92", "clock-face-three-oclock"},  // U+1F552
    {"\xf0\x9f\x95\x93", "clock-face-four-oclock"},  // U+1F553
    {"\xf0\x9f\x95\x94", "clock-face-five-oclock"},  // U+1F554
    {"\xf0\x9f\x95\x95", "clock-face-six-oclock"},  // U+1F555
    {"\xf0\x9f\x95\x96", "clock-face-seven-oclock"},  // U+1F556
    {"\xf0\x9f\x95\x97", "clock-face-eight-oclock"},  // U+1F557
    {"\xf0\x9f\x95\x98", "clock-face-nine-oclock"},  // U+1F558
    {"\xf0\x9f\x95\x99", "clock-face-ten-oclock"},  // U+1F559
    {"\xf0\x9f\x95\x9a", "clock-face-eleven-oclock"},  // U+1F55A
    {"\xf0\x9f\x95\x9b", "clock-face-twelve-oclock"},  // U+1F55B
    {"\xf0\x9f\x95\x9c", "clock-face-one-thirty"},  // U+1F55C
    {"\xf0\x9f\x95\x9d", "clock-face-two-thirty"},  // U+1F55D
    {"\xf0\x9f\x95\x9e", "clock-face-three-thirty"},  // U+1F55E
    {"\xf0\x9f\x95\x9f", "clock-face-four-thirty"},  // U+1F55F
    {"\xf0\x9f\x95\xa0", "clock-face-five-thirty"},  // U+1F560
    {"\xf0\x9f\x95\xa1", "clock-face-six-thirty"},  // U+1F561
    {"\xf0\x9f\x95\xa2", "clock-face-seven-thirty"},  // U+1F562
    {"\xf0\x9f\x95\xa3", "clock-face-eight-thirty"},  // U+1F563
    {"\xf0\x9f\x95\xa4", "clock-face-nine-thirty"},  // U+1F564
    {"\xf0\x9f\x95\xa5", "clock-face-ten-thirty"},  // U+1F565
    {"\xf0\x9f\x95\xa6", "clock-face-eleven-thirty"},  // U+1F566
    {"\xf0\x9f\x95\xa7", "clock-face-twelve-thirty"},  // U+1F567
    {"\xf0\x9f\x95\xa8", "right-speaker"},  // U+1F568
    {"\xf0\x9f\x95\xa9", "right-speaker-with-one-sound-wave"},  // U+1F569
    {"\xf0\x9f\x95\xaa", "right-speaker-with-three-sound-waves"},  // U+1F56A
    {"\xf0\x9f\x95\xab", "bullhorn"},  // U+1F56B
    {"\xf0\x9f\x95\xac", "bullhorn-with-sound-waves"},  // U+1F56C
    {"\xf0\x9f\x95\xad", "ringing-bell"},  // U+1F56D
    {"\xf0\x9f\x95\xae", "book"},  // U+1F56E
    {"\xf0\x9f\x95\xaf", "candle"},  // U+1F56F
    {"\xf0\x9f\x95\xb0", "mantelpiece-clock"},  // U+1F570
    {"\xf0\x9f\x95\xb1", "black-skull-and-crossbones"},  // U+1F571
    {"\xf0\x9f\x95\xb2", "no-piracy"},  // U+1F572
    {"\xf0\x9f\x95\xb3", "hole"},  // U+1F573
    {"\xf0\x9f\x95\xb4", "man-in-business-suit-levitating"},  // U+1F574
    {"\xf0\x9f\x95\xb5", "sleuth-or-spy"},  // U+1F575
    {"\xf0\x9f\x95\xb6", "dark-sunglasses"},  // U+1F576
    {"\xf0\x9f\x95\xb7", "spider"},  // U+1F577
    {"\xf0\x9f\x95\xb8", "spider-web"},  // U+1F578
    {"\xf0\x9f\x95\xb9", "joystick"},  // U+1F579
    {"\xf0\x9f\x95\xba", "man-dancing"},  // U+1F57A
    {"\xf0\x9f\x95\xbb", "left-hand-telephone-receiver"},  // U+1F57B
    {"\xf0\x9f\x95\xbc", "telephone-receiver-with-page"},  // U+1F57C
    {"\xf0\x9f\x95\xbd", "right-hand-telephone-receiver"},  // U+1F57D
    {"\xf0\x9f\x95\xbe", "white-touchtone-telephone"},  // U+1F57E
    {"\xf0\x9f\x95\xbf", "black-touchtone-telephone"},  // U+1F57F
    {"\xf0\x9f\x96\x80", "telephone-on-top-of-modem"},  // U+1F580
    {"\xf0\x9f\x96\x81", "clamshell-mobile-phone"},  // U+1F581
    {"\xf0\x9f\x96\x82", "back-of-envelope"},  // U+1F582
    {"\xf0\x9f\x96\x83", "stamped-envelope"},  // U+1F583
    {"\xf0\x9f\x96\x84", "envelope-with-lightning"},  // U+1F584
    {"\xf0\x9f\x96\x85", "flying-envelope"},  // U+1F585
    {"\xf0\x9f\x96\x86", "pen-over-stamped-envelope"},  // U+1F586
    {"\xf0\x9f\x96\x87", "linked-paperclips"},  // U+1F587
    {"\xf0\x9f\x96\x88", "black-pushpin"},  // U+1F588
    {"\xf0\x9f\x96\x89", "lower-left-pencil"},  // U+1F589
    {"\xf0\x9f\x96\x8a", "lower-left-ballpoint-pen"},  // U+1F58A
    {"\xf0\x9f\x96\x8b", "lower-left-fountain-pen"},  // U+1F58B
    {"\xf0\x9f\x96\x8c", "lower-left-paintbrush"},  // U+1F58C
    {"\xf0\x9f\x96\x8d", "lower-left-crayon"},  // U+1F58D
    {"\xf0\x9f\x96\x8e", "left-writing-hand"},  // U+1F58E
    {"\xf0\x9f\x96\x8f", "turned-ok-hand-sign"},  // U+1F58F
    {"\xf0\x9f\x96\x90", "raised-hand-with-fingers-splayed"},  // U+1F590
    {"\xf0\x9f\x96\x91", "reversed-raised-hand-with-fingers-splayed"},  // U+1F591
    {"\xf0\x9f\x96\x92", "reversed-thumbs-up-sign"},  // U+1F592
    {"\xf0\x9f\x96\x93", "reversed-thumbs-down-sign"},  // U+1F593
    {"\xf0\x9f\x96\x94", "reversed-victory-hand"},  // U+1F594
    {"\xf0\x9f\x96\x95", "reversed-hand-with-middle-finger-extended"},  // U+1F595
    {"\xf0\x9f\x96\x96", "raised-hand-with-part-between-middle-and-ring-fingers"},  // U+1F596
    {"\xf0\x9f\x96\x97", "white-down-pointing-left-hand-index"},  // U+1F597
    {"\xf0\x9f\x96\x98", "sideways-white-left-pointing-index"},  // U+1F598
    {"\xf0\x9f\x96\x99", "sideways-white-right-pointing-index"},  // U+1F599
    {"\xf0\x9f\x96\x9a", "sideways-black-left-pointing-index"},  // U+1F59A
    {"\xf0\x9f\x96\x9b", "sideways-black-right-pointing-index"},  // U+1F59B
    {"\xf0\x9f\x96\x9c", "black-left-pointing-backhand-index"},  // U+1F59C
    {"\xf0\x9f\x96\x9d", "black-right-pointing-backhand-index"},  // U+1F59D
    {"\xf0\x9f\x96\x9e", "sideways-white-up-pointing-index"},  // U+1F59E
    {"\xf0\x9f\x96\x9f", "sideways-white-down-pointing-index"},  // U+1F59F
    {"\xf0\x9f\x96\xa0", "sideways-black-up-pointing-index"},  // U+1F5A0
    {"\xf0\x9f\x96\xa1", "sideways-black-down-pointing-index"},  // U+1F5A1
    {"\xf0\x9f\x96\xa2", "black-up-pointing-backhand-index"},  // U+1F5A2
    {"\xf0\x9f\x96\xa3", "black-down-pointing-backhand-index"},  // U+1F5A3
    {"\xf0\x9f\x96\xa4", "black-heart"},  // U+1F5A4
    {"\xf0\x9f\x96\xa5", "desktop-computer"},  // U+1F5A5
    {"\xf0\x9f\x96\xa6", "keyboard-and-mouse"},  // U+1F5A6
    {"\xf0\x9f\x96\xa7", "three-networked-computers"},  // U+1F5A7
    {"\xf0\x9f\x96\xa8", "printer"},  // U+1F5A8
    {"\xf0\x9f\x96\xa9", "pocket-calculator"},  // U+1F5A9
    {"\xf0\x9f\x96\xaa", "black-hard-shell-floppy-disk"},  // U+1F5AA
    {"\xf0\x9f\x96\xab", "white-hard-shell-floppy-disk"},  // U+1F5AB
    {"\xf0\x9f\x96\xac", "soft-shell-floppy-disk"},  // U+1F5AC
    {"\xf0\x9f\x96\xad", "tape-cartridge"},  // U+1F5AD
    {"\xf0\x9f\x96\xae", "wired-keyboard"},  // U+1F5AE
    {"\xf0\x9f\x96\xaf", "one-button-mouse"},  // U+1F5AF
    {"\xf0\x9f\x96\xb0", "two-button-mouse"},  // U+1F5B0
    {"\xf0\x9f\x96\xb1", "three-button-mouse"},  // U+1F5B1
    {"\xf0\x9f\x96\xb2", "trackball"},  // U+1F5B2
    {"\xf0\x9f\x96\xb3", "old-personal-computer"},  // U+1F5B3
    {"\xf0\x9f\x96\xb4", "hard-disk"},  // U+1F5B4
    {"\xf0\x9f\x96\xb5", "screen"},  // U+1F5B5
    {"\xf0\x9f\x96\xb6", "printer-icon"},  // U+1F5B6
    {"\xf0\x9f\x96\xb7", "fax-icon"},  // U+1F5B7
    {"\xf0\x9f\x96\xb8", "optical-disc-icon"},  // U+1F5B8
    {"\xf0\x9f\x96\xb9", "document-with-text"},  // U+1F5B9
    {"\xf0\x9f\x96\xba", "document-with-text-and-picture"},  // U+1F5BA
    {"\xf0\x9f\x96\xbb", "document-with-picture"},  // U+1F5BB
    {"\xf0\x9f\x96\xbc", "frame-with-picture"},  // U+1F5BC
    {"\xf0\x9f\x96\xbd", "frame-with-tiles"},  // U+1F5BD
    {"\xf0\x9f\x96\xbe", "frame-with-an-x"},  // U+1F5BE
    {"\xf0\x9f\x96\xbf", "black-folder"},  // U+1F5BF
    {"\xf0\x9f\x97\x80", "folder"},  // U+1F5C0
    {"\xf0\x9f\x97\x81", "open-folder"},  // U+1F5C1
    {"\xf0\x9f\x97\x82", "card-index-dividers"},  // U+1F5C2
    {"\xf0\x9f\x97\x83", "card-file-box"},  // U+1F5C3
    {"\xf0\x9f\x97\x84", "file-cabinet"},  // U+1F5C4
    {"\xf0\x9f\x97\x85", "empty-note"},  // U+1F5C5
    {"\xf0\x9f\x97\x86", "empty-note-page"},  // U+1F5C6
    {"\xf0\x9f\x97\x87", "empty-note-pad"},  // U+1F5C7
    {"\xf0\x9f\x97\x88", "note"},  // U+1F5C8
    {"\xf0\x9f\x97\x89", "note-page"},  // U+1F5C9
    {"\xf0\x9f\x97\x8a", "note-pad"},  // U+1F5CA
    {"\xf0\x9f\x97\x8b", "empty-document"},  // U+1F5CB
    {"\xf0\x9f\x97\x8c", "empty-page"},  // U+1F5CC
    {"\xf0\x9f\x97\x8d", "empty-pages"},  // U+1F5CD
    {"\xf0\x9f\x97\x8e", "document"},  // U+1F5CE
    {"\xf0\x9f\x97\x8f", "page"},  // U+1F5CF
    {"\xf0\x9f\x97\x90", "pages"},  // U+1F5D0
    {"\xf0\x9f\x97\x91", "wastebasket"},  // U+1F5D1
    {"\xf0\x9f\x97\x92", "spiral-note-pad"},  // U+1F5D2
    {"\xf0\x9f\x97\x93", "spiral-calendar-pad"},  // U+1F5D3
    {"\xf0\x9f\x97\x94", "desktop-window"},  // U+1F5D4
    {"\xf0\x9f\x97\x95", "minimize"},  // U+1F5D5
    {"\xf0\x9f\x97\x96", "maximize"},  // U+1F5D6
    {"\xf0\x9f\x97\x97", "overlap"},  // U+1F5D7
    {"\xf0\x9f\x97\x98", "clockwise-right-and-left-semicircle-arrows"},  // U+1F5D8
    {"\xf0\x9f\x97\x99", "cancellation-x"},  // U+1F5D9
    {"\xf0\x9f\x97\x9a", "increase-font-size"},  // U+1F5DA
    {"\xf0\x9f\x97\x9b", "decrease-font-size"},  // U+1F5DB
    {"\xf0\x9f\x97\x9c", "compression"},  // U+1F5DC
    {"\xf0\x9f\x97\x9d", "old-key"},  // U+1F5DD
    {"\xf0\x9f\x97\x9e", "rolled-up-newspaper"},  // U+1F5DE
    {"\xf0\x9f\x97\x9f", "page-with-circled-text"},  // U+1F5DF
    {"\xf0\x9f\x97\xa0", "stock-chart"},  // U+1F5E0
    {"\xf0\x9f\x97\xa1", "dagger-knife"},  // U+1F5E1
    {"\xf0\x9f\x97\xa2", "lips"},  // U+1F5E2
    {"\xf0\x9f\x97\xa3", "speaking-head-in-silhouette"},  // U+1F5E3
    {"\xf0\x9f\x97\xa4", "three-rays-above"},  // U+1F5E4
    {"\xf0\x9f\x97\xa5", "three-rays-below"},  // U+1F5E5
    {"\xf0\x9f\x97\xa6", "three-rays-left"},  // U+1F5E6
    {"\xf0\x9f\x97\xa7", "three-rays-right"},  // U+1F5E7
    {"\xf0\x9f\x97\xa8", "left-speech-bubble"},  // U+1F5E8
    {"\xf0\x9f\x97\xa9", "right-speech-bubble"},  // U+1F5E9
    {"\xf0\x9f\x97\xaa", "two-speech-bubbles"},  // U+1F5EA
    {"\xf0\x9f\x97\xab", "three-speech-bubbles"},  // U+1F5EB
    {"\xf0\x9f\x97\xac", "left-thought-bubble"},  // U+1F5EC
    {"\xf0\x9f\x97\xad", "right-thought-bubble"},  // U+1F5ED
    {"\xf0\x9f\x97\xae", "left-anger-bubble"},  // U+1F5EE
    {"\xf0\x9f\x97\xaf", "right-anger-bubble"},  // U+1F5EF
    {"\xf0\x9f\x97\xb0", "mood-bubble"},  // U+1F5F0
    {"\xf0\x9f\x97\xb1", "lightning-mood-bubble"},  // U+1F5F1
    {"\xf0\x9f\x97\xb2", "lightning-mood"},  // U+1F5F2
    {"\xf0\x9f\x97\xb3", "ballot-box-with-ballot"},  // U+1F5F3
    {"\xf0\x9f\x97\xb4", "ballot-script-x"},  // U+1F5F4
    {"\xf0\x9f\x97\xb5", "ballot-box-with-script-x"},  // U+1F5F5
    {"\xf0\x9f\x97\xb6", "ballot-bold-script-x"},  // U+1F5F6
    {"\xf0\x9f\x97\xb7", "ballot-box-with-bold-script-x"},  // U+1F5F7
    {"\xf0\x9f\x97\xb8", "light-check-mark"},  // U+1F5F8
    {"\xf0\x9f\x97\xb9", "ballot-box-with-bold-check"},  // U+1F5F9
    {"\xf0\x9f\x97\xba", "world-map"},  // U+1F5FA
    {"\xf0\x9f\x97\xbb", "mount-fuji"},  // U+1F5FB
    {"\xf0\x9f\x97\xbc", "tokyo-tower"},  // U+1F5FC
    {"\xf0\x9f\x97\xbd", "statue-of-liberty"},  // U+1F5FD
    {"\xf0\x9f\x97\xbe", "silhouette-of-japan"},  // U+1F5FE
    {"\xf0\x9f\x97\xbf", "moyai"},  // U+1F5FF
    {"\xf0\x9f\x98\x80", "grinning-face"},  // U+1F600
    {"\xf0\x9f\x98\x81", "grinning-face-with-smiling-eyes"},  // U+1F601
    {"\xf0\x9f\x98\x82", "face-with-tears-of-joy"},  // U+1F602
    {"\xf0\x9f\x98\x83", "smiling-face-with-open-mouth"},  // U+1F603
    {"\xf0\x9f\x98\x84", "smiling-face-with-open-mouth-and-smiling-eyes"},  // U+1F604
    {"\xf0\x9f\x98\x85", "smiling-face-with-open-mouth-and-cold-sweat"},  // U+1F605
    {"\xf0\x9f\x98\x86", "smiling-face-with-open-mouth-and-tightly-closed-eyes"},  // U+1F606
    {"\xf0\x9f\x98\x87", "smiling-face-with-halo"},  // U+1F607
    {"\xf0\x9f\x98\x88", "smiling-face-with-horns"},  // U+1F608
    {"\xf0\x9f\x98\x89", "winking-face"},  // U+1F609
    {"\xf0\x9f\x98\x8a", "smiling-face-with-smiling-eyes"},  // U+1F60A
    {"\xf0\x9f\x98\x8b", "face-savouring-delicious-food"},  // U+1F60B
    {"\xf0\x9f\x98\x8c", "relieved-face"},  // U+1F60C
    {"\xf0\x9f\x98\x8d", "smiling-face-with-heart-shaped-eyes"},  // U+1F60D
    {"\xf0\x9f\x98\x8e", "smiling-face-with-sunglasses"},  // U+1F60E
    {"\xf0\x9f\x98\x8f", "smirking-face"},  // U+1F60F
    {"\xf0\x9f\x98\x90", "neutral-face"},  // U+1F610
    {"\xf0\x9f\x98\x91", "expressionless-face"},  // U+1F611
    {"\xf0\x9f\x98\x92", "unamused-face"},  // U+1F612
    {"\xf0\x9f\x98\x93", "face-with-cold-sweat"},  // U+1F613
    {"\xf0\x9f\x98\x94", "pensive-face"},  // U+1F614
    {"\xf0\x9f\x98\x95", "confused-face"},  // U+1F615
    {"\xf0\x9f\x98\x96", "confounded-face"},  // U+1F616
    {"\xf0\x9f\x98\x97", "kissing-face"},  // U+1F617
    {"\xf0\x9f\x98\x98", "face-throwing-a-kiss"},  // U+1F618
    {"\xf0\x9f\x98\x99", "kissing-face-with-smiling-eyes"},  // U+1F619
    {"\xf0\x9f\x98\x9a", "kissing-face-with-closed-eyes"},  // U+1F61A
    {"\xf0\x9f\x98\x9b", "face-with-stuck-out-tongue"},  // U+1F61B
    {"\xf0\x9f\x98\x9c", "face-with-stuck-out-tongue-and-winking-eye"},  // U+1F61C
    {"\xf0\x9f\x98\x9d", "face-with-stuck-out-tongue-and-tightly-closed-eyes"},  // U+1F61D
    {"\xf0\x9f\x98\x9e", "disappointed-face"},  // U+1F61E
    {"\xf0\x9f\x98\x9f", "worried-face"},  // U+1F61F
    {"\xf0\x9f\x98\xa0", "angry-face"},  // U+1F620
    {"\xf0\x9f\x98\xa1", "pouting-face"},  // U+1F621
    {"\xf0\x9f\x98\xa2", "crying-face"},  // U+1F622
    {"\xf0\x9f\x98\xa3", "persevering-face"},  // U+1F623
    {"\xf0\x9f\x98\xa4", "face-with-look-of-triumph"},  // U+1F624
    {"\xf0\x9f\x98\xa5", "disappointed-but-relieved-face"},  // U+1F625
    {"\xf0\x9f\x98\xa6", "frowning-face-with-open-mouth"},  // U+1F626
    {"\xf0\x9f\x98\xa7", "anguished-face"},  // U+1F627
    {"\xf0\x9f\x98\xa8", "fearful-face"},  // U+1F628
    {"\xf0\x9f\x98\xa9", "weary-face"},  // U+1F629
    {"\xf0\x9f\x98\xaa", "sleepy-face"},  // U+1F62A
    {"\xf0\x9f\x98\xab", "tired-face"},  // U+1F62B
    {"\xf0\x9f\x98\xac", "grimacing-face"},  // U+1F62C
    {"\xf0\x9f\x98\xad", "loudly-crying-face"},  // U+1F62D
    {"\xf0\x9f\x98\xae", "face-with-open-mouth"},  // U+1F62E
    {"\xf0\x9f\x98\xaf", "hushed-face"},  // U+1F62F
    {"\xf0\x9f\x98\xb0", "face-with-open-mouth-and-cold-sweat"},  // U+1F630
    {"\xf0\x9f\x98\xb1", "face-screaming-in-fear"},  // U+1F631
    {"\xf0\x9f\x98\xb2", "astonished-face"},  // U+1F632
    {"\xf0\x9f\x98\xb3", "flushed-face"},  // U+1F633
    {"\xf0\x9f\x98\xb4", "sleeping-face"},  // U+1F634
    {"\xf0\x9f\x98\xb5", "dizzy-face"},  // U+1F635
    {"\xf0\x9f\x98\xb6", "face-without-mouth"},  // U+1F636
    {"\xf0\x9f\x98\xb7", "face-with-medical-mask"},  // U+1F637
    {"\xf0\x9f\x98\xb8", "grinning-cat-face-with-smiling-eyes"},  // U+1F638
    {"\xf0\x9f\x98\xb9", "cat-face-with-tears-of-joy"},  // U+1F639
    {"\xf0\x9f\x98\xba", "smiling-cat-face-with-open-mouth"},  // U+1F63A
    {"\xf0\x9f\x98\xbb", "smiling-cat-face-with-heart-shaped-eyes"},  // U+1F63B
    {"\xf0\x9f\x98\xbc", "cat-face-with-wry-smile"},  // U+1F63C
    {"\xf0\x9f\x98\xbd", "kissing-cat-face-with-closed-eyes"},  // U+1F63D
    {"\xf0\x9f\x98\xbe", "pouting-cat-face"},  // U+1F63E
    {"\xf0\x9f\x98\xbf", "crying-cat-face"},  // U+1F63F
    {"\xf0\x9f\x99\x80", "weary-cat-face"},  // U+1F640
    {"\xf0\x9f\x99\x81", "slightly-frowning-face"},  // U+1F641
    {"\xf0\x9f\x99\x82", "slightly-smiling-face"},  // U+1F642
    {"\xf0\x9f\x99\x83", "upside-down-face"},  // U+1F643
    {"\xf0\x9f\x99\x84", "face-with-rolling-eyes"},  // U+1F644
    {"\xf0\x9f\x99\x85", "face-with-no-good-gesture"},  // U+1F645
    {"\xf0\x9f\x99\x86", "face-with-ok-gesture"},  // U+1F646
    {"\xf0\x9f\x99\x87", "person-bowing-deeply"},  // U+1F647
    {"\xf0\x9f\x99\x88", "see-no-evil-monkey"},  // U+1F648
    {"\xf0\x9f\x99\x89", "hear-no-evil-monkey"},  // U+1F649
    {"\xf0\x9f\x99\x8a", "speak-no-evil-monkey"},  // U+1F64A
    {"\xf0\x9f\x99\x8b", "happy-person-raising-one-hand"},  // U+1F64B
    {"\xf0\x9f\x99\x8c", "person-raising-both-hands-in-celebration"},  // U+1F64C
    {"\xf0\x9f\x99\x8d", "person-frowning"},  // U+1F64D
    {"\xf0\x9f\x99\x8e", "person-with-pouting-face"},  // U+1F64E
    {"\xf0\x9f\x99\x8f", "person-with-folded-hands"},  // U+1F64F
    {"\xf0\x9f\x9a\x80", "rocket"},  // U+1F680
    {"\xf0\x9f\x9a\x81", "helicopter"},  // U+1F681
    {"\xf0\x9f\x9a\x82", "steam-locomotive"},  // U+1F682
    {"\xf0\x9f\x9a\x83", "railway-car"},  // U+1F683
    {"\xf0\x9f\x9a\x84", "high-speed-train"},  // U+1F684
    {"\xf0\x9f\x9a\x85", "high-speed-train-with-bullet-nose"},  // U+1F685
    {"\xf0\x9f\x9a\x86", "train"},  // U+1F686
    {"\xf0\x9f\x9a\x87", "metro"},  // U+1F687
    {"\xf0\x9f\x9a\x88", "light-rail"},  // U+1F688
    {"\xf0\x9f\x9a\x89", "station"},  // U+1F689
    {"\xf0\x9f\x9a\x8a", "tram"},  // U+1F68A
    {"\xf0\x9f\x9a\x8b", "tram-car"},  // U+1F68B
    {"\xf0\x9f\x9a\x8c", "bus"},  // U+1F68C
    {"\xf0\x9f\x9a\x8d", "oncoming-bus"},  // U+1F68D
    {"\xf0\x9f\x9a\x8e", "trolleybus"},  // U+1F68E
    {"\xf0\x9f\x9a\x8f", "bus-stop"},  // U+1F68F
    {"\xf0\x9f\x9a\x90", "minibus"},  // U+1F690
    {"\xf0\x9f\x9a\x91", "ambulance"},  // U+1F691
    {"\xf0\x9f\x9a\x92", "fire-engine"},  // U+1F692
    {"\xf0\x9f\x9a\x93", "police-car"},  // U+1F693
    {"\xf0\x9f\x9a\x94", "oncoming-police-car"},  // U+1F694
    {"\xf0\x9f\x9a\x95", "taxi"},  // U+1F695
    {"\xf0\x9f\x9a\x96", "oncoming-taxi"},  // U+1F696
    {"\xf0\x9f\x9a\x97", "automobile"},  // U+1F697
    {"\xf0\x9f\x9a\x98", "oncoming-automobile"},  // U+1F698
    {"\xf0\x9f\x9a\x99", "recreational-vehicle"},  // U+1F699
    {"\xf0\x9f\x9a\x9a", "delivery-truck"},  // U+1F69A
    {"\xf0\x9f\x9a\x9b", "articulated-lorry"},  // U+1F69B
    {"\xf0\x9f\x9a\x9c", "tractor"},  // U+1F69C
    {"\xf0\x9f\x9a\x9d", "monorail"},  // U+1F69D
    {"\xf0\x9f\x9a\x9e", "mountain-railway"},  // U+1F69E
    {"\xf0\x9f\x9a\x9f", "suspension-railway"},  // U+1F69F
    {"\xf0\x9f\x9a\xa0", "mountain-cableway"},  // U+1F6A0
    {"\xf0\x9f\x9a\xa1", "aerial-tramway"},  // U+1F6A1
    {"\xf0\x9f\x9a\xa2", "ship"},  // U+1F6A2
    {"\xf0\x9f\x9a\xa3", "rowboat"},  // U+1F6A3
    {"\xf0\x9f\x9a\xa4", "speedboat"},  // U+1F6A4
    {"\xf0\x9f\x9a\xa5", "horizontal-traffic-light"},  // U+1F6A5
    {"\xf0\x9f\x9a\xa6", "vertical-traffic-light"},  // U+1F6A6
    {"\xf0\x9f\x9a\xa7", "construction-sign"},  // U+1F6A7
    {"\xf0\x9f\x9a\xa8", "police-cars-revolving-light"},  // U+1F6A8
    {"\xf0\x9f\x9a\xa9", "triangular-flag-on-post"},  // U+1F6A9
    {"\xf0\x9f\x9a\xaa", "door"},  // U+1F6AA
    {"\xf0\x9f\x9a\xab", "no-entry-sign"},  // U+1F6AB
    {"\xf0\x9f\x9a\xac", "smoking"},  // U+1F6AC
    {"\xf0\x9f\x9a\xad", "no-smoking"},  // U+1F6AD
    {"\xf0\x9f\x9a\xae", "put-litter-in-its-place"},  // U+1F6AE
    {"\xf0\x9f\x9a\xaf", "do-not-litter"},  // U+1F6AF
    {"\xf0\x9f\x9a\xb0", "potable-water"},  // U+1F6B0
    {"\xf0\x9f\x9a\xb1", "non-potable-water"},  // U+1F6B1
    {"\xf0\x9f\x9a\xb2", "bicycle"},  // U+1F6B2
    {"\xf0\x9f\x9a\xb3", "no-bicycles"},  // U+1F6B3
    {"\xf0\x9f\x9a\xb4", "bicyclist"},  // U+1F6B4
    {"\xf0\x9f\x9a\xb5", "mountain-bicyclist"},  // U+1F6B5
    {"\xf0\x9f\x9a\xb6", "pedestrian"},  // U+1F6B6
    {"\xf0\x9f\x9a\xb7", "no-pedestrians"},  // U+1F6B7
    {"\xf0\x9f\x9a\xb8", "children-crossing"},  // U+1F6B8
    {"\xf0\x9f\x9a\xb9", "mens"},  // U+1F6B9
    {"\xf0\x9f\x9a\xba", "womens"},  // U+1F6BA
    {"\xf0\x9f\x9a\xbb", "restroom"},  // U+1F6BB
    {"\xf0\x9f\x9a\xbc", "baby"},  // U+1F6BC
    {"\xf0\x9f\x9a\xbd", "toilet"},  // U+1F6BD
    {"\xf0\x9f\x9a\xbe", "water-closet"},  // U+1F6BE
    {"\xf0\x9f\x9a\xbf", "shower"},  // U+1F6BF
    {"\xf0\x9f\x9b\x80", "bath"},  // U+1F6C0
    {"\xf0\x9f\x9b\x81", "bathtub"},  // U+1F6C1
    {"\xf0\x9f\x9b\x82", "passport-control"},  // U+1F6C2
    {"\xf0\x9f\x9b\x83", "customs"},  // U+1F6C3
    {"\xf0\x9f\x9b\x84", "baggage-claim"},  // U+1F6C4
    {"\xf0\x9f\x9b\x85", "left-luggage"},  // U+1F6C5
    {"\xf0\x9f\x9b\x86", "triangle-with-rounded-corners"},  // U+1F6C6
    {"\xf0\x9f\x9b\x87", "prohibited-sign"},  // U+1F6C7
    {"\xf0\x9f\x9b\x88", "circled-information-source"},  // U+1F6C8
    {"\xf0\x9f\x9b\x89", "boys"},  // U+1F6C9
    {"\xf0\x9f\x9b\x8a", "girls"},  // U+1F6CA
    {"\xf0\x9f\x9b\x8b", "couch-and-lamp"},  // U+1F6CB
    {"\xf0\x9f\x9b\x8c", "sleeping-accommodation"},  // U+1F6CC
    {"\xf0\x9f\x9b\x8d", "shopping-bags"},  // U+1F6CD
    {"\xf0\x9f\x9b\x8e", "bellhop-bell"},  // U+1F6CE
    {"\xf0\x9f\x9b\x8f", "bed"},  // U+1F6CF
    {"\xf0\x9f\x9b\x90", "place-of-worship"},  // U+1F6D0
    {"\xf0\x9f\x9b\x91", "octagonal-sign"},  // U+1F6D1
    {"\xf0\x9f\x9b\x92", "shopping-trolley"},  // U+1F6D2
    {"\xf0\x9f\x9b\x93", "stupa"},  // U+1F6D3
    {"\xf0\x9f\x9b\x94", "pagoda"},  // U+1F6D4
    {"\xf0\x9f\x9b\x95", "hindu-temple"},  // U+1F6D5
    {"\xf0\x9f\x9b\x96", "hut"},  // U+1F6D6
    {"\xf0\x9f\x9b\x97", "elevator"},  // U+1F6D7
    {"\xf0\x9f\x9b\xa0", "hammer-and-wrench"},  // U+1F6E0
    {"\xf0\x9f\x9b\xa1", "shield"},  // U+1F6E1
    {"\xf0\x9f\x9b\xa2", "oil-drum"},  // U+1F6E2
    {"\xf0\x9f\x9b\xa3", "motorway"},  // U+1F6E3
    {"\xf0\x9f\x9b\xa4", "railway-track"},  // U+1F6E4
    {"\xf0\x9f\x9b\xa5", "motor-boat"},  // U+1F6E5
    {"\xf0\x9f\x9b\xa6", "up-pointing-military-airplane"},  // U+1F6E6
    {"\xf0\x9f\x9b\xa7", "up-pointing-airplane"},  // U+1F6E7
    {"\xf0\x9f\x9b\xa8", "up-pointing-small-airplane"},  // U+1F6E8
    {"\xf0\x9f\x9b\xa9", "small-airplane"},  // U+1F6E9
    {"\xf0\x9f\x9b\xaa", "northeast-pointing-airplane"},  // U+1F6EA
    {"\xf0\x9f\x9b\xab", "airplane-departure"},  // U+1F6EB
    {"\xf0\x9f\x9b\xac", "airplane-arriving"},  // U+1F6EC
    {"\xf0\x9f\x9b\xb0", "satellite"},  // U+1F6F0
    {"\xf0\x9f\x9b\xb1", "oncoming-fire-engine"},  // U+1F6F1
    {"\xf0\x9f\x9b\xb2", "diesel-locomotive"},  // U+1F6F2
    {"\xf0\x9f\x9b\xb3", "passenger-ship"},  // U+1F6F3
    {"\xf0\x9f\x9b\xb4", "scooter"},  // U+1F6F4
    {"\xf0\x9f\x9b\xb5", "motor-scooter"},  // U+1F6F5
    {"\xf0\x9f\x9b\xb6", "canoe"},  // U+1F6F6
    {"\xf0\x9f\x9b\xb7", "sled"},  // U+1F6F7
    {"\xf0\x9f\x9b\xb8", "flying-saucer"},  // U+1F6F8
    {"\xf0\x9f\x9b\xb9", "skateboard"},  // U+1F6F9
    {"\xf0\x9f\x9b\xba", "auto-rickshaw"},  // U+1F6FA
    {"\xf0\x9f\x9b\xbb", "pickup-truck"},  // U+1F6FB
    {"\xf0\x9f\x9b\xbc", "roller-skate"},  // U+1F6FC
    {"\xf0\x9f\xa4\x80", "circled-cross-formee-with-four-dots"},  // U+1F900
    {"\xf0\x9f\xa4\x81", "circled-cross-formee-with-two-dots"},  // U+1F901
    {"\xf0\x9f\xa4\x82", "circled-cross-formee"},  // U+1F902
    {"\xf0\x9f\xa4\x83", "left-half-circle-with-four-dots"},  // U+1F903
    {"\xf0\x9f\xa4\x84", "left-half-circle-with-three-dots"},  // U+1F904
    {"\xf0\x9f\xa4\x85", "left-half-circle-with-two-dots"},  // U+1F905
    {"\xf0\x9f\xa4\x86", "left-half-circle-with-dot"},  // U+1F906
    {"\xf0\x9f\xa4\x87", "left-half-circle"},  // U+1F907
    {"\xf0\x9f\xa4\x88", "downward-facing-hook"},  // U+1F908
    {"\xf0\x9f\xa4\x89", "downward-facing-notched-hook"},  // U+1F909
    {"\xf0\x9f\xa4\x8a", "downward-facing-hook-with-dot"},  // U+1F90A
    {"\xf0\x9f\xa4\x8b", "downward-facing-notched-hook-with-dot"},  // U+1F90B
    {"\xf0\x9f\xa4\x8c", "pinched-fingers"},  // U+1F90C
    {"\xf0\x9f\xa4\x8d", "white-heart"},  // U+1F90D
    {"\xf0\x9f\xa4\x8e", "brown-heart"},  // U+1F90E
    {"\xf0\x9f\xa4\x8f", "pinching-hand"},  // U+1F90F
    {"\xf0\x9f\xa4\x90", "zipper-mouth-face"},  // U+1F910
    {"\xf0\x9f\xa4\x91", "money-mouth-face"},  // U+1F911
    {"\xf0\x9f\xa4\x92", "face-with-thermometer"},  // U+1F912
    {"\xf0\x9f\xa4\x93", "nerd-face"},  // U+1F913
    {"\xf0\x9f\xa4\x94", "thinking-face"},  // U+1F914
    {"\xf0\x9f\xa4\x95", "face-with-head-bandage"},  // U+1F915
    {"\xf0\x9f\xa4\x96", "robot-face"},  // U+1F916
    {"\xf0\x9f\xa4\x97", "hugging-face"},  // U+1F917
    {"\xf0\x9f\xa4\x98", "sign-of-the-horns"},  // U+1F918
    {"\xf0\x9f\xa4\x99", "call-me-hand"},  // U+1F919
    {"\xf0\x9f\xa4\x9a", "raised-back-of-hand"},  // U+1F91A
    {"\xf0\x9f\xa4\x9b", "left-facing-fist"},  // U+1F91B
    {"\xf0\x9f\xa4\x9c", "right-facing-fist"},  // U+1F91C
    {"\xf0\x9f\xa4\x9d", "handshake"},  // U+1F91D
    {"\xf0\x9f\xa4\x9e", "hand-with-index-and-middle-fingers-crossed"},  // U+1F91E
    {"\xf0\x9f\xa4\x9f", "i-love-you-hand-sign"},  // U+1F91F
    {"\xf0\x9f\xa4\xa0", "face-with-cowboy-hat"},  // U+1F920
    {"\xf0\x9f\xa4\xa1", "clown-face"},  // U+1F921
    {"\xf0\x9f\xa4\xa2", "nauseated-face"},  // U+1F922
    {"\xf0\x9f\xa4\xa3", "rolling-on-the-floor-laughing"},  // U+1F923
    {"\xf0\x9f\xa4\xa4", "drooling-face"},  // U+1F924
    {"\xf0\x9f\xa4\xa5", "lying-face"},  // U+1F925
    {"\xf0\x9f\xa4\xa6", "face-palm"},  // U+1F926
    {"\xf0\x9f\xa4\xa7", "sneezing-face"},  // U+1F927
    {"\xf0\x9f\xa4\xa8", "face-with-one-eyebrow-raised"},  // U+1F928
    {"\xf0\x9f\xa4\xa9", "grinning-face-with-star-eyes"},  // U+1F929
    {"\xf0\x9f\xa4\xaa", "grinning-face-with-one-large-and-one-small-eye"},  // U+1F92A
    {"\xf0\x9f\xa4\xab", "face-with-finger-covering-closed-lips"},  // U+1F92B
    {"\xf0\x9f\xa4\xac", "serious-face-with-symbols-covering-mouth"},  // U+1F92C
    {"\xf0\x9f\xa4\xad", "smiling-face-with-smiling-eyes-and-hand-covering-mouth"},  // U+1F92D
    {"\xf0\x9f\xa4\xae", "face-with-open-mouth-vomiting"},  // U+1F92E
    {"\xf0\x9f\xa4\xaf", "shocked-face-with-exploding-head"},  // U+1F92F
    {"\xf0\x9f\xa4\xb0", "pregnant-woman"},  // U+1F930
    {"\xf0\x9f\xa4\xb1", "breast-feeding"},  // U+1F931
    {"\xf0\x9f\xa4\xb2", "palms-up-together"},  // U+1F932
    {"\xf0\x9f\xa4\xb3", "selfie"},  // U+1F933
    {"\xf0\x9f\xa4\xb4", "prince"},  // U+1F934
    {"\xf0\x9f\xa4\xb5", "man-in-tuxedo"},  // U+1F935
    {"\xf0\x9f\xa4\xb6", "mother-christmas"},  // U+1F936
    {"\xf0\x9f\xa4\xb7", "shrug"},  // U+1F937
    {"\xf0\x9f\xa4\xb8", "person-doing-cartwheel"},  // U+1F938
    {"\xf0\x9f\xa4\xb9", "juggling"},  // U+1F939
    {"\xf0\x9f\xa4\xba", "fencer"},  // U+1F93A
    {"\xf0\x9f\xa4\xbb", "modern-pentathlon"},  // U+1F93B
    {"\xf0\x9f\xa4\xbc", "wrestlers"},  // U+1F93C
    {"\xf0\x9f\xa4\xbd", "water-polo"},  // U+1F93D
    {"\xf0\x9f\xa4\xbe", "handball"},  // U+1F93E
    {"\xf0\x9f\xa4\xbf", "diving-mask"},  // U+1F93F
    {"\xf0\x9f\xa5\x80", "wilted-flower"},  // U+1F940
    {"\xf0\x9f\xa5\x81", "drum-with-drumsticks"},  // U+1F941
    {"\xf0\x9f\xa5\x82", "clinking-glasses"},  // U+1F942
    {"\xf0\x9f\xa5\x83", "tumbler-glass"},  // U+1F943
    {"\xf0\x9f\xa5\x84", "spoon"},  // U+1F944
    {"\xf0\x9f\xa5\x85", "goal-net"},  // U+1F945
    {"\xf0\x9f\xa5\x86", "rifle"},  // U+1F946
    {"\xf0\x9f\xa5\x87", "first-place-medal"},  // U+1F947
    {"\xf0\x9f\xa5\x88", "second-place-medal"},  // U+1F948
    {"\xf0\x9f\xa5\x89", "third-place-medal"},  // U+1F949
    {"\xf0\x9f\xa5\x8a", "boxing-glove"},  // U+1F94A
    {"\xf0\x9f\xa5\x8b", "martial-arts-uniform"},  // U+1F94B
    {"\xf0\x9f\xa5\x8c", "curling-stone"},  // U+1F94C
    {"\xf0\x9f\xa5\x8d", "lacrosse-stick-and-ball"},  // U+1F94D
    {"\xf0\x9f\xa5\x8e", "softball"},  // U+1F94E
    {"\xf0\x9f\xa5\x8f", "flying-disc"},  // U+1F94F
    {"\xf0\x9f\xa5\x90", "croissant"},  // U+1F950
    {"\xf0\x9f\xa5\x91", "avocado"},  // U+1F951
    {"\xf0\x9f\xa5\x92", "cucumber"},  // U+1F952
    {"\xf0\x9f\xa5\x93", "bacon"},  // U+1F953
    {"\xf0\x9f\xa5\x94", "potato"},  // U+1F954
    {"\xf0\x9f\xa5\x95", "carrot"},  // U+1F955
    {"\xf0\x9f\xa5\x96", "baguette-bread"},  // U+1F956
    {"\xf0\x9f\xa5\x97", "green-salad"},  // U+1F957
    {"\xf0\x9f\xa5\x98", "shallow-pan-of-food"},  // U+1F958
    {"\xf0\x9f\xa5\x99", "stuffed-flatbread"},  // U+1F959
    {"\xf0\x9f\xa5\x9a", "egg"},  // U+1F95A
    {"\xf0\x9f\xa5\x9b", "glass-of-milk"},  // U+1F95B
    {"\xf0\x9f\xa5\x9c", "peanuts"},  // U+1F95C
    {"\xf0\x9f\xa5\x9d", "kiwifruit"},  // U+1F95D
    {"\xf0\x9f\xa5\x9e", "pancakes"},  // U+1F95E
    {"\xf0\x9f\xa5\x9f", "dumpling"},  // U+1F95F
    {"\xf0\x9f\xa5\xa0", "fortune-cookie"},  // U+1F960
    {"\xf0\x9f\xa5\xa1", "takeout-box"},  // U+1F961
    {"\xf0\x9f\xa5\xa2", "chopsticks"},  // U+1F962
    {"\xf0\x9f\xa5\xa3", "bowl-with-spoon"},  // U+1F963
    {"\xf0\x9f\xa5\xa4", "cup-with-straw"},  // U+1F964
    {"\xf0\x9f\xa5\xa5", "coconut"},  // U+1F965
    {"\xf0\x9f\xa5\xa6", "broccoli"},  // U+1F966
    {"\xf0\x9f\xa5\xa7", "pie"},  // U+1F967
    {"\xf0\x9f\xa5\xa8", "pretzel"},  // U+1F968
    {"\xf0\x9f\xa5\xa9", "cut-of-meat"},  // U+1F969
    {"\xf0\x9f\xa5\xaa", "sandwich"},  // U+1F96A
    {"\xf0\x9f\xa5\xab", "canned-food"},  // U+1F96B
    {"\xf0\x9f\xa5\xac", "leafy-green"},  // U+1F96C
    {"\xf0\x9f\xa5\xad", "mango"},  // U+1F96D
    {"\xf0\x9f\xa5\xae", "moon-cake"},  // U+1F96E
    {"\xf0\x9f\xa5\xaf", "bagel"},  // U+1F96F
    {"\xf0\x9f\xa5\xb0", "smiling-face-with-smiling-eyes-and-three-hearts"},  // U+1F970
    {"\xf0\x9f\xa5\xb1", "yawning-face"},  // U+1F971
    {"\xf0\x9f\xa5\xb2", "smiling-face-with-tear"},  // U+1F972
    {"\xf0\x9f\xa5\xb3", "face-with-party-horn-and-party-hat"},  // U+1F973
    {"\xf0\x9f\xa5\xb4", "face-with-uneven-eyes-and-wavy-mouth"},  // U+1F974
    {"\xf0\x9f\xa5\xb5", "overheated-face"},  // U+1F975
    {"\xf0\x9f\xa5\xb6", "freezing-face"},  // U+1F976
    {"\xf0\x9f\xa5\xb7", "ninja"},  // U+1F977
    {"\xf0\x9f\xa5\xb8", "disguised-face"},  // U+1F978
    {"\xf0\x9f\xa5\xba", "face-with-pleading-eyes"},  // U+1F97A
    {"\xf0\x9f\xa5\xbb", "sari"},  // U+1F97B
    {"\xf0\x9f\xa5\xbc", "lab-coat"},  // U+1F97C
    {"\xf0\x9f\xa5\xbd", "goggles"},  // U+1F97D
    {"\xf0\x9f\xa5\xbe", "hiking-boot"},  // U+1F97E
    {"\xf0\x9f\xa5\xbf", "flat-shoe"},  // U+1F97F
    {"\xf0\x9f\xa6\x80", "crab"},  // U+1F980
    {"\xf0\x9f\xa6\x81", "lion-face"},  // U+1F981
    {"\xf0\x9f\xa6\x82", "scorpion"},  // U+1F982
    {"\xf0\x9f\xa6\x83", "turkey"},  // U+1F983
    {"\xf0\x9f\xa6\x84", "unicorn-face"},  // U+1F984
    {"\xf0\x9f\xa6\x85", "eagle"},  // U+1F985
    {"\xf0\x9f\xa6\x86", "duck"},  // U+1F986
    {"\xf0\x9f\xa6\x87", "bat"},  // U+1F987
    {"\xf0\x9f\xa6\x88", "shark"},  // U+1F988
    {"\xf0\x9f\xa6\x89", "owl"},  // U+1F989
    {"\xf0\x9f\xa6\x8a", "fox-face"},  // U+1F98A
    {"\xf0\x9f\xa6\x8b", "butterfly"},  // U+1F98B
    {"\xf0\x9f\xa6\x8c", "deer"},  // U+1F98C
    {"\xf0\x9f\xa6\x8d", "gorilla"},  // U+1F98D
    {"\xf0\x9f\xa6\x8e", "lizard"},  // U+1F98E
    {"\xf0\x9f\xa6\x8f", "rhinoceros"},  // U+1F98F
    {"\xf0\x9f\xa6\x90", "shrimp"},  // U+1F990
    {"\xf0\x9f\xa6\x91", "squid"},  // U+1F991
    {"\xf0\x9f\xa6\x92", "giraffe-face"},  // U+1F992
    {"\xf0\x9f\xa6\x93", "zebra-face"},  // U+1F993
    {"\xf0\x9f\xa6\x94", "hedgehog"},  // U+1F994
    {"\xf0\x9f\xa6\x95", "sauropod"},  // U+1F995
    {"\xf0\x9f\xa6\x96", "t-rex"},  // U+1F996
    {"\xf0\x9f\xa6\x97", "cricket"},  // U+1F997
    {"\xf0\x9f\xa6\x98", "kangaroo"},  // U+1F998
    {"\xf0\x9f\xa6\x99", "llama"},  // U+1F999
    {"\xf0\x9f\xa6\x9a", "peacock"},  // U+1F99A
    {"\xf0\x9f\xa6\x9b", "hippopotamus"},  // U+1F99B
    {"\xf0\x9f\xa6\x9c", "parrot"},  // U+1F99C
    {"\xf0\x9f\xa6\x9d", "raccoon"},  // U+1F99D
    {"\xf0\x9f\xa6\x9e", "lobster"},  // U+1F99E
    {"\xf0\x9f\xa6\x9f", "mosquito"},  // U+1F99F
    {"\xf0\x9f\xa6\xa0", "microbe"},  // U+1F9A0
    {"\xf0\x9f\xa6\xa1", "badger"},  // U+1F9A1
    {"\xf0\x9f\xa6\xa2", "swan"},  // U+1F9A2
    {"\xf0\x9f\xa6\xa3", "mammoth"},  // U+1F9A3
    {"\xf0\x9f\xa6\xa4", "dodo"},  // U+1F9A4
    {"\xf0\x9f\xa6\xa5", "sloth"},  // U+1F9A5
    {"\xf0\x9f\xa6\xa6", "otter"},  // U+1F9A6
    {"\xf0\x9f\xa6\xa7", "orangutan"},  // U+1F9A7
    {"\xf0\x9f\xa6\xa8", "skunk"},  // U+1F9A8
    {"\xf0\x9f\xa6\xa9", "flamingo"},  // U+1F9A9
    {"\xf0\x9f\xa6\xaa", "oyster"},  // U+1F9AA
    {"\xf0\x9f\xa6\xab", "beaver"},  // U+1F9AB
    {"\xf0\x9f\xa6\xac", "bison"},  // U+1F9AC
    {"\xf0\x9f\xa6\xad", "seal"},  // U+1F9AD
    {"\xf0\x9f\xa6\xae", "guide-dog"},  // U+1F9AE
    {"\xf0\x9f\xa6\xaf", "probing-cane"},  // U+1F9AF
    {"\xf0\x9f\xa6\xb0", "emoji-component-red-hair"},  // U+1F9B0
    {"\xf0\x9f\xa6\xb1", "emoji-component-curly-hair"},  // U+1F9B1
    {"\xf0\x9f\xa6\xb2", "emoji-component-bald"},  // U+1F9B2
    {"\xf0\x9f\xa6\xb3", "emoji-component-white-hair"},  // U+1F9B3
    {"\xf0\x9f\xa6\xb4", "bone"},  // U+1F9B4
    {"\xf0\x9f\xa6\xb5", "leg"},  // U+1F9B5
    {"\xf0\x9f\xa6\xb6", "foot"},  // U+1F9B6
    {"\xf0\x9f\xa6\xb7", "tooth"},  // U+1F9B7
    {"\xf0\x9f\xa6\xb8", "superhero"},  // U+1F9B8
    {"\xf0\x9f\xa6\xb9", "supervillain"},  // U+1F9B9
    {"\xf0\x9f\xa6\xba", "safety-vest"},  // U+1F9BA
    {"\xf0\x9f\xa6\xbb", "ear-with-hearing-aid"},  // U+1F9BB
    {"\xf0\x9f\xa6\xbc", "motorized-wheelchair"},  // U+1F9BC
    {"\xf0\x9f\xa6\xbd", "manual-wheelchair"},  // U+1F9BD
    {"\xf0\x9f\xa6\xbe", "mechanical-arm"},  // U+1F9BE
    {"\xf0\x9f\xa6\xbf", "mechanical-leg"},  // U+1F9BF
    {"\xf0\x9f\xa7\x80", "cheese-wedge"},  // U+1F9C0
    {"\xf0\x9f\xa7\x81", "cupcake"},  // U+1F9C1
    {"\xf0\x9f\xa7\x82", "salt-shaker"},  // U+1F9C2
    {"\xf0\x9f\xa7\x83", "beverage-box"},  // U+1F9C3
    {"\xf0\x9f\xa7\x84", "garlic"},  // U+1F9C4
    {"\xf0\x9f\xa7\x85", "onion"},  // U+1F9C5
    {"\xf0\x9f\xa7\x86", "falafel"},  // U+1F9C6
    {"\xf0\x9f\xa7\x87", "waffle"},  // U+1F9C7
    {"\xf0\x9f\xa7\x88", "butter"},  // U+1F9C8
    {"\xf0\x9f\xa7\x89", "mate-drink"},  // U+1F9C9
    {"\xf0\x9f\xa7\x8a", "ice-cube"},  // U+1F9CA
    {"\xf0\x9f\xa7\x8b", "bubble-tea"},  // U+1F9CB
    {"\xf0\x9f\xa7\x8d", "standing-person"},  // U+1F9CD
    {"\xf0\x9f\xa7\x8e", "kneeling-person"},  // U+1F9CE
    {"\xf0\x9f\xa7\x8f", "deaf-person"},  // U+1F9CF
    {"\xf0\x9f\xa7\x90", "face-with-monocle"},  // U+1F9D0
    {"\xf0\x9f\xa7\x91", "adult"},  // U+1F9D1
    {"\xf0\x9f\xa7\x92", "child"},  // U+1F9D2
    {"\xf0\x9f\xa7\x93", "older-adult"},  // U+1F9D3
    {"\xf0\x9f\xa7\x94", "bearded-person"},  // U+1F9D4
    {"\xf0\x9f\xa7\x95", "person-with-headscarf"},  // U+1F9D5
    {"\xf0\x9f\xa7\x96", "person-in-steamy-room"},  // U+1F9D6
    {"\xf0\x9f\xa7\x97", "person-climbing"},  // U+1F9D7
    {"\xf0\x9f\xa7\x98", "person-in-lotus-position"},  // U+1F9D8
    {"\xf0\x9f\xa7\x99", "mage"},  // U+1F9D9
    {"\xf0\x9f\xa7\x9a", "fairy"},  // U+1F9DA
    {"\xf0\x9f\xa7\x9b", "vampire"},  // U+1F9DB
    {"\xf0\x9f\xa7\x9c", "merperson"},  // U+1F9DC
    {"\xf0\x9f\xa7\x9d", "elf"},  // U+1F9DD
    {"\xf0\x9f\xa7\x9e", "genie"},  // U+1F9DE
    {"\xf0\x9f\xa7\x9f", "zombie"},  // U+1F9DF
    {"\xf0\x9f\xa7\xa0", "brain"},  // U+1F9E0
    {"\xf0\x9f\xa7\xa1", "orange-heart"},  // U+1F9E1
    {"\xf0\x9f\xa7\xa2", "billed-cap"},  // U+1F9E2
    {"\xf0\x9f\xa7\xa3", "scarf"},  // U+1F9E3
    {"\xf0\x9f\xa7\xa4", "gloves"},  // U+1F9E4
    {"\xf0\x9f\xa7\xa5", "coat"},  // U+1F9E5
    {"\xf0\x9f\xa7\xa6", "socks"},  // U+1F9E6
    {"\xf0\x9f\xa7\xa7", "red-gift-envelope"},  // U+1F9E7
    {"\xf0\x9f\xa7\xa8", "firecracker"},  // U+1F9E8
    {"\xf0\x9f\xa7\xa9", "jigsaw-puzzle-piece"},  // U+1F9E9
    {"\xf0\x9f\xa7\xaa", "test-tube"},  // U+1F9EA
    {"\xf0\x9f\xa7\xab", "petri-dish"},  // U+1F9EB
    {"\xf0\x9f\xa7\xac", "dna-double-helix"},  // U+1F9EC
    {"\xf0\x9f\xa7\xad", "compass"},  // U+1F9ED
    {"\xf0\x9f\xa7\xae", "abacus"},  // U+1F9EE
    {"\xf0\x9f\xa7\xaf", "fire-extinguisher"},  // U+1F9EF
    {"\xf0\x9f\xa7\xb0", "toolbox"},  // U+1F9F0
    {"\xf0\x9f\xa7\xb1", "brick"},  // U+1F9F1
    {"\xf0\x9f\xa7\xb2", "magnet"},  // U+1F9F2
    {"\xf0\x9f\xa7\xb3", "luggage"},  // U+1F9F3
    {"\xf0\x9f\xa7\xb4", "lotion-bottle"},  // U+1F9F4
    {"\xf0\x9f\xa7\xb5", "spool-of-thread"},  // U+1F9F5
    {"\xf0\x9f\xa7\xb6", "ball-of-yarn"},  // U+1F9F6
    {"\xf0\x9f\xa7\xb7", "safety-pin"},  // U+1F9F7
    {"\xf0\x9f\xa7\xb8", "teddy-bear"},  // U+1F9F8
    {"\xf0\x9f\xa7\xb9", "broom"},  // U+1F9F9
    {"\xf0\x9f\xa7\xba", "basket"},  // U+1F9FA
    {"\xf0\x9f\xa7\xbb", "roll-of-paper"},  // U+1F9FB
    {"\xf0\x9f\xa7\xbc", "bar-of-soap"},  // U+1F9FC
    {"\xf0\x9f\xa7\xbd", "sponge"},  // U+1F9FD
    {"\xf0\x9f\xa7\xbe", "receipt"},  // U+1F9FE
    {"\xf0\x9f\xa7\xbf", "nazar-amulet"},  // U+1F9FF
};

}  // namespace

const std::map<std::string, std::string>& default_emoji_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const EmojiEntry& e : kEmojiEntries) t.emplace(e.utf8, e.name);
    return t;
  }();
  return table;
}

}  // namespace slicecheck

#include "aztec/linalg.hpp"

namespace aztec {

// 320 fixed primes just below 2^62, descending. Deterministic pool for the
// CRT determinant; sized for Hadamard bounds up to ~19000 bits.
namespace {
constexpr std::uint64_t kPrimePool[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL, 4611686018427387761ULL,
    4611686018427387751ULL, 4611686018427387737ULL, 4611686018427387733ULL, 4611686018427387709ULL,
    4611686018427387701ULL, 4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL,
    4611686018427387461ULL, 4611686018427387421ULL, 4611686018427387409ULL, 4611686018427387329ULL,
    4611686018427387323ULL, 4611686018427387301ULL, 4611686018427387271ULL, 4611686018427387241ULL,
    4611686018427387139ULL, 4611686018427387131ULL, 4611686018427387127ULL, 4611686018427387113ULL,
    4611686018427387091ULL, 4611686018427387073ULL, 4611686018427386981ULL, 4611686018427386923ULL,
    4611686018427386911ULL, 4611686018427386903ULL, 4611686018427386897ULL, 4611686018427386887ULL,
    4611686018427386707ULL, 4611686018427386663ULL, 4611686018427386611ULL, 4611686018427386551ULL,
    4611686018427386471ULL, 4611686018427386389ULL, 4611686018427386351ULL, 4611686018427386329ULL,
    4611686018427386323ULL, 4611686018427386309ULL, 4611686018427386287ULL, 4611686018427386231ULL,
    4611686018427386207ULL, 4611686018427386203ULL, 4611686018427386201ULL, 4611686018427386081ULL,
    4611686018427386023ULL, 4611686018427385993ULL, 4611686018427385981ULL, 4611686018427385861ULL,
    4611686018427385831ULL, 4611686018427385801ULL, 4611686018427385763ULL, 4611686018427385717ULL,
    4611686018427385687ULL, 4611686018427385657ULL, 4611686018427385619ULL, 4611686018427385553ULL,
    4611686018427385537ULL, 4611686018427385529ULL, 4611686018427385507ULL, 4611686018427385483ULL,
    4611686018427385393ULL, 4611686018427385363ULL, 4611686018427385321ULL, 4611686018427385243ULL,
    4611686018427385229ULL, 4611686018427385151ULL, 4611686018427385127ULL, 4611686018427385111ULL,
    4611686018427385043ULL, 4611686018427385013ULL, 4611686018427384977ULL, 4611686018427384881ULL,
    4611686018427384863ULL, 4611686018427384683ULL, 4611686018427384653ULL, 4611686018427384649ULL,
    4611686018427384647ULL, 4611686018427384641ULL, 4611686018427384587ULL, 4611686018427384527ULL,
    4611686018427384383ULL, 4611686018427384367ULL, 4611686018427384359ULL, 4611686018427384353ULL,
    4611686018427384341ULL, 4611686018427384233ULL, 4611686018427384199ULL, 4611686018427384137ULL,
    4611686018427384107ULL, 4611686018427384101ULL, 4611686018427384031ULL, 4611686018427383971ULL,
    4611686018427383741ULL, 4611686018427383657ULL, 4611686018427383629ULL, 4611686018427383603ULL,
    4611686018427383527ULL, 4611686018427383501ULL, 4611686018427383419ULL, 4611686018427383347ULL,
    4611686018427383309ULL, 4611686018427383263ULL, 4611686018427383243ULL, 4611686018427383197ULL,
    4611686018427383123ULL, 4611686018427383089ULL, 4611686018427383083ULL, 4611686018427383047ULL,
    4611686018427383023ULL, 4611686018427382987ULL, 4611686018427382963ULL, 4611686018427382933ULL,
    4611686018427382913ULL, 4611686018427382907ULL, 4611686018427382901ULL, 4611686018427382849ULL,
    4611686018427382801ULL, 4611686018427382771ULL, 4611686018427382751ULL, 4611686018427382639ULL,
    4611686018427382549ULL, 4611686018427382511ULL, 4611686018427382459ULL, 4611686018427382439ULL,
    4611686018427382429ULL, 4611686018427382421ULL, 4611686018427382357ULL, 4611686018427382333ULL,
    4611686018427382267ULL, 4611686018427382259ULL, 4611686018427382211ULL, 4611686018427382133ULL,
    4611686018427382099ULL, 4611686018427382087ULL, 4611686018427382021ULL, 4611686018427382019ULL,
    4611686018427381989ULL, 4611686018427381977ULL, 4611686018427381961ULL, 4611686018427381913ULL,
    4611686018427381877ULL, 4611686018427381869ULL, 4611686018427381847ULL, 4611686018427381841ULL,
    4611686018427381827ULL, 4611686018427381781ULL, 4611686018427381769ULL, 4611686018427381757ULL,
    4611686018427381679ULL, 4611686018427381667ULL, 4611686018427381631ULL, 4611686018427381623ULL,
    4611686018427381581ULL, 4611686018427381577ULL, 4611686018427381571ULL, 4611686018427381493ULL,
    4611686018427381479ULL, 4611686018427381379ULL, 4611686018427381331ULL, 4611686018427381307ULL,
    4611686018427381287ULL, 4611686018427381277ULL, 4611686018427381239ULL, 4611686018427381077ULL,
    4611686018427380999ULL, 4611686018427380897ULL, 4611686018427380861ULL, 4611686018427380833ULL,
    4611686018427380791ULL, 4611686018427380621ULL, 4611686018427380569ULL, 4611686018427380533ULL,
    4611686018427380509ULL, 4611686018427380489ULL, 4611686018427380383ULL, 4611686018427380369ULL,
    4611686018427380363ULL, 4611686018427380357ULL, 4611686018427380303ULL, 4611686018427380267ULL,
    4611686018427380197ULL, 4611686018427380147ULL, 4611686018427380089ULL, 4611686018427380083ULL,
    4611686018427380063ULL, 4611686018427380059ULL, 4611686018427379993ULL, 4611686018427379889ULL,
    4611686018427379789ULL, 4611686018427379783ULL, 4611686018427379769ULL, 4611686018427379753ULL,
    4611686018427379721ULL, 4611686018427379673ULL, 4611686018427379651ULL, 4611686018427379643ULL,
    4611686018427379583ULL, 4611686018427379579ULL, 4611686018427379553ULL, 4611686018427379531ULL,
    4611686018427379511ULL, 4611686018427379447ULL, 4611686018427379337ULL, 4611686018427379319ULL,
    4611686018427379303ULL, 4611686018427379291ULL, 4611686018427379273ULL, 4611686018427379259ULL,
    4611686018427379217ULL, 4611686018427379201ULL, 4611686018427379141ULL, 4611686018427379081ULL,
    4611686018427379057ULL, 4611686018427379033ULL, 4611686018427379009ULL, 4611686018427378997ULL,
    4611686018427378929ULL, 4611686018427378907ULL, 4611686018427378899ULL, 4611686018427378871ULL,
    4611686018427378841ULL, 4611686018427378809ULL, 4611686018427378617ULL, 4611686018427378557ULL,
    4611686018427378469ULL, 4611686018427378391ULL, 4611686018427378311ULL, 4611686018427378173ULL,
    4611686018427378151ULL, 4611686018427378127ULL, 4611686018427378113ULL, 4611686018427378083ULL,
    4611686018427378049ULL, 4611686018427377999ULL, 4611686018427377927ULL, 4611686018427377881ULL,
    4611686018427377741ULL, 4611686018427377707ULL, 4611686018427377677ULL, 4611686018427377671ULL,
    4611686018427377653ULL, 4611686018427377581ULL, 4611686018427377543ULL, 4611686018427377531ULL,
    4611686018427377479ULL, 4611686018427377473ULL, 4611686018427377471ULL, 4611686018427377447ULL,
    4611686018427377401ULL, 4611686018427377381ULL, 4611686018427377339ULL, 4611686018427377291ULL,
    4611686018427377269ULL, 4611686018427377261ULL, 4611686018427377221ULL, 4611686018427377213ULL,
    4611686018427377119ULL, 4611686018427377107ULL, 4611686018427377093ULL, 4611686018427377041ULL,
    4611686018427377039ULL, 4611686018427377017ULL, 4611686018427376919ULL, 4611686018427376873ULL,
    4611686018427376783ULL, 4611686018427376781ULL, 4611686018427376717ULL, 4611686018427376697ULL,
    4611686018427376687ULL, 4611686018427376649ULL, 4611686018427376633ULL, 4611686018427376631ULL,
    4611686018427376597ULL, 4611686018427376561ULL, 4611686018427376541ULL, 4611686018427376481ULL,
    4611686018427376453ULL, 4611686018427376451ULL, 4611686018427376411ULL, 4611686018427376319ULL,
    4611686018427376247ULL, 4611686018427376243ULL, 4611686018427376237ULL, 4611686018427376171ULL,
    4611686018427376087ULL, 4611686018427376081ULL, 4611686018427376013ULL, 4611686018427376003ULL,
    4611686018427375989ULL, 4611686018427375961ULL, 4611686018427375859ULL, 4611686018427375851ULL,
    4611686018427375817ULL, 4611686018427375791ULL, 4611686018427375781ULL, 4611686018427375751ULL,
    4611686018427375743ULL, 4611686018427375731ULL, 4611686018427375721ULL, 4611686018427375647ULL,
    4611686018427375577ULL, 4611686018427375533ULL, 4611686018427375479ULL, 4611686018427375443ULL,
    4611686018427375389ULL, 4611686018427375373ULL, 4611686018427375361ULL, 4611686018427375281ULL,
    4611686018427375259ULL, 4611686018427375253ULL, 4611686018427375187ULL, 4611686018427375163ULL,
    4611686018427375119ULL, 4611686018427375079ULL, 4611686018427374989ULL, 4611686018427374987ULL,};
} // namespace

std::span<const std::uint64_t> prime_pool() {
    return {kPrimePool, sizeof(kPrimePool) / sizeof(kPrimePool[0])};
}

} // namespace aztec

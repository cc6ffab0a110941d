#include "exceptional_tables.hpp"

namespace nilspan::detail {

const std::vector<ExceptionalRow>& g2_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"0", "00"},
      {"A_1", "10"},
      {"~A_1", "01"},
      {"G_2(a_1)", "20"},
      {"G_2", "22"},
  };
  return rows;
}

const std::vector<ExceptionalRow>& f4_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"0", "0000"},
      {"A_1", "1000"},
      {"~A_1", "0001"},
      {"A_1+~A_1", "0100"},
      {"A_2", "2000"},
      {"~A_2", "0002"},
      {"A_2+~A_1", "0010"},
      {"B_2", "2001"},
      {"~A_2+A_1", "0101"},
      {"C_3(a_1)", "1010"},
      {"F_4(a_3)", "0200"},
      {"B_3", "2200"},
      {"C_3", "1012"},
      {"F_4(a_2)", "0202"},
      {"F_4(a_1)", "2202"},
      {"F_4", "2222"},
  };
  return rows;
}

const std::vector<ExceptionalRow>& e6_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"0", "000000"},
      {"A_1", "000001"},
      {"2A_1", "100010"},
      {"3A_1", "001000"},
      {"A_2", "000002"},
      {"A_2+A_1", "100011"},
      {"2A_2", "200020"},
      {"A_2+2A_1", "010100"},
      {"A_3", "100012"},
      {"2A_2+A_1", "101010"},
      {"A_3+A_1", "010101"},
      {"D_4(a_1)", "002000"},
      {"A_4", "200022"},
      {"D_4", "002002"},
      {"A_4+A_1", "110111"},
      {"A_5", "210121"},
      {"D_5(a_1)", "110112"},
      {"E_6(a_3)", "202020"},
      {"D_5", "202022"},
      {"E_6(a_1)", "220222"},
      {"E_6", "222222"},
  };
  return rows;
}

const std::vector<ExceptionalRow>& e7_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"0", "0000000"},
      {"A_1", "0000010"},
      {"2A_1", "0100000"},
      {"(3A_1)''", "2000000"},
      {"(3A_1)'", "0000100"},
      {"A_2", "0000020"},
      {"4A_1", "1000001"},
      {"A_2+A_1", "0100010"},
      {"A_2+2A_1", "0001000"},
      {"2A_2", "0200000"},
      {"A_2+3A_1", "0000002"},
      {"A_3", "0100020"},
      {"(A_3+A_1)''", "2000020"},
      {"2A_2+A_1", "0100100"},
      {"(A_3+A_1)'", "0001010"},
      {"A_3+2A_1", "1010010"},
      {"D_4(a_1)", "0000200"},
      {"D_4", "0000220"},
      {"D_4(a_1)+A_1", "1000101"},
      {"A_3+A_2", "0101000"},
      {"A_3+A_2+A_1", "0020000"},
      {"A_4", "0200020"},
      {"(A_5)''", "2200020"},
      {"D_4+A_1", "1000121"},
      {"A_4+A_1", "0101010"},
      {"A_4+A_2", "0002000"},
      {"D_5(a_1)", "0101020"},
      {"(A_5)'", "0201010"},
      {"A_5+A_1", "2101010"},
      {"D_5(a_1)+A_1", "0020020"},
      {"D_6(a_2)", "2010101"},
      {"E_6(a_3)", "0200200"},
      {"D_5", "0200220"},
      {"E_7(a_5)", "2002000"},
      {"A_6", "0202000"},
      {"D_5+A_1", "0110121"},
      {"D_6(a_1)", "2010121"},
      {"E_7(a_4)", "2002020"},
      {"D_6", "2210121"},
      {"E_6(a_1)", "0202020"},
      {"E_6", "0202220"},
      {"E_7(a_3)", "2202020"},
      {"E_7(a_2)", "2020222"},
      {"E_7(a_1)", "2220222"},
      {"E_7", "2222222"},
  };
  return rows;
}

const std::vector<ExceptionalRow>& e8_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"0", "00000000"},
      {"A_1", "10000000"},
      {"2A_1", "00000010"},
      {"3A_1", "01000000"},
      {"A_2", "20000000"},
      {"4A_1", "00000001"},
      {"A_2+A_1", "10000010"},
      {"A_2+2A_1", "00100000"},
      {"A_3", "20000010"},
      {"A_2+3A_1", "00000100"},
      {"2A_2", "00000020"},
      {"2A_2+A_1", "01000010"},
      {"A_3+A_1", "10100000"},
      {"D_4(a_1)", "02000000"},
      {"2A_2+2A_1", "00010000"},
      {"D_4", "22000000"},
      {"A_3+2A_1", "10000100"},
      {"D_4(a_1)+A_1", "01000001"},
      {"A_3+A_2", "00100010"},
      {"A_4", "20000020"},
      {"A_3+A_2+A_1", "00001000"},
      {"D_4(a_1)+A_2", "00000002"},
      {"D_4+A_1", "21000001"},
      {"2A_3", "00010010"},
      {"A_4+A_1", "10100010"},
      {"D_5(a_1)", "20100010"},
      {"A_4+2A_1", "10001000"},
      {"A_4+A_2", "00200000"},
      {"A_4+A_2+A_1", "00100100"},
      {"A_5", "10100020"},
      {"D_5(a_1)+A_1", "20001000"},
      {"D_4+A_2", "20000002"},
      {"E_6(a_3)", "02000020"},
      {"A_4+A_3", "01001000"},
      {"D_5", "22000020"},
      {"A_5+A_1", "10001010"},
      {"D_5(a_1)+A_2", "10100100"},
      {"D_6(a_2)", "01000101"},
      {"E_6(a_3)+A_1", "01010010"},
      {"E_7(a_5)", "00101000"},
      {"D_5+A_1", "21010010"},
      {"E_8(a_7)", "00020000"},
      {"A_6", "00200020"},
      {"D_6(a_1)", "21000101"},
      {"A_6+A_1", "00101010"},
      {"E_7(a_4)", "20101000"},
      {"D_5+A_2", "20020000"},
      {"E_6(a_1)", "20200020"},
      {"D_6", "21000121"},
      {"D_7(a_2)", "10101010"},
      {"E_6", "22200020"},
      {"A_7", "01101010"},
      {"E_6(a_1)+A_1", "20101010"},
      {"E_7(a_3)", "20101020"},
      {"E_8(b_6)", "20002000"},
      {"D_7(a_1)", "20020020"},
      {"E_6+A_1", "22101010"},
      {"E_7(a_2)", "22010101"},
      {"E_8(a_6)", "02002000"},
      {"D_7", "10110121"},
      {"E_8(b_5)", "22002000"},
      {"E_7(a_1)", "22010121"},
      {"E_8(a_5)", "02002020"},
      {"E_8(b_4)", "22002020"},
      {"E_7", "22210121"},
      {"E_8(a_4)", "20202020"},
      {"E_8(a_3)", "22202020"},
      {"E_8(a_2)", "22020222"},
      {"E_8(a_1)", "22220222"},
      {"E_8", "22222222"},
  };
  return rows;
}

}  // namespace nilspan::detail

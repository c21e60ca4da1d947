using System;
using System.Collections.Generic;
using PoiKit.Util;

namespace PoiKit
{
    public class Sheet
    {
        private List<int> widths = new List<int>();

        public int CellWidth(int col)
        {
            return widths[col];
        }

        public int CellWidth(int col, bool padded)
        {
            int w = widths[col];
            return padded ? w + 2 : w;
        }

        public Dictionary<string, int> WidthsByLabel(CellHelper helper)
        {
            var result = new Dictionary<string, int>();
            for (int col = 0; col < widths.Count; col++)
            {
                result[helper.FormatLabel("col" + col)] = widths[col];
            }
            return result;
        }
    }
}

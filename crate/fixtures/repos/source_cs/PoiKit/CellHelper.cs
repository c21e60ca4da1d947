using System;

namespace PoiKit
{
    public class CellHelper
    {
        private int count;
        private string label;

        public int CollectCount()
        {
            // running total of collected cells
            count += 1;
            return count;
        }

        public void Reset()
        {
            count = 0;
        }

        public string FormatLabel(string prefix)
        {
            return prefix + ":" + label;
        }
    }
}
